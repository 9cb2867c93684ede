#pragma once

#include <memory>
#include <vector>

#include <Eigen/SparseCore>

#include "eitff/linalg.hpp"
#include "eitff/permutation.hpp"
#include "eitff/symmetric_rep.hpp"
#include "eitff/young.hpp"

namespace eitff {

/// Number of diagonal boxes p of a symmetric partition.
int diagonal_count(const Partition& nu);

/// (|nu| - p) / 2, the exponent of i in the associator.
int quarter_turns(const Partition& nu);

/// i^q.
cd i_power(int q);

/// Real iff (|nu| - p)/2 is even. Throws NotSymmetric.
Field field_for(const Partition& nu);

/// Symmetric partition with an odd number of distinct parts.
bool is_big(const Partition& nu);

/// Reference tableau of a symmetric partition: row superstandard when small,
/// otherwise the small partition's reference with n placed at (p, p).
StandardTableau reference_tableau(const Partition& nu);

/// Reference tableau for lambda in the up-set of a small symmetric mu.
StandardTableau pair_reference_tableau(const Partition& lambda, const Partition& mu);

/// sgn(g_T) where g_T reference = T.
int reference_sign(const StandardTableau& T, const StandardTableau& reference);

/// U v_T = i^q sgn(g_T) v_{T'} on V_nu, nu symmetric.
ComplexMatrix associator_unitary(const Partition& nu);

/// Indices (canonical order) of tableaux with 2 in box (1, 2).
std::vector<int> tab_star_indices(const Partition& nu);

/// Columns w_T = (v_T + eps i^q sgn(g_T) v_{T'}) / sqrt 2 for T with T_{1,2} = 2.
ComplexMatrix eigenspace_injection(const Partition& nu, int eps);

/// rho(s_1 s_k) in the w basis, 2 <= k <= n - 1; needs n >= 5.
ComplexMatrix an_generator_matrix(const Partition& nu, int eps, int k);

/// rho(g) for even g in the w basis.
ComplexMatrix an_rep_matrix(const Partition& nu, int eps, const Permutation& g);

/// Sparse form of the pieces rho^eps of a symmetric nu, shared per (nu, eps).
class AlternatingRep {
public:
    AlternatingRep(const Partition& nu, int eps);

    const Partition& shape() const { return shape_; }
    int eps() const { return eps_; }
    int dim() const { return static_cast<int>(star_.size()); }
    const std::vector<int>& tab_star() const { return star_; }
    /// Position of a tableau in the Tab_* basis, or -1.
    int star_index(const StandardTableau& T) const;
    /// Coefficient i^q sgn(g_T) with T' on the other side.
    cd associator_coefficient(const StandardTableau& T) const;

    const Eigen::SparseMatrix<cd>& generator(int k) const { return gens_[k]; }
    /// X <- rho(g) X, g even.
    void apply(const Permutation& g, ComplexMatrix& x) const;

private:
    Partition shape_;
    int eps_;
    std::shared_ptr<const YoungRep> rep_;
    StandardTableau reference_;
    cd phase_;
    std::vector<int> star_;
    std::vector<int> star_pos_;
    std::vector<Eigen::SparseMatrix<cd>> gens_;
};

std::shared_ptr<const AlternatingRep> alternating_rep(const Partition& nu, int eps);

/// U on the direct sum of V_lambda over the up-set of mu, blocks in up-set order:
/// v_T -> i^q sgn(g_T) v_{T'} with q from mu.
ComplexMatrix pair_associator_unitary(const Partition& mu);

/// i^q sgn(g_T) for T of a shape in the up-set of mu.
cd pair_associator_coefficient(const StandardTableau& T, const Partition& mu);

/// Columns w_T for T in Tab(lambda), in coordinates of V_lambda (+) V_lambda'.
ComplexMatrix pair_injection(const Partition& lambda, const Partition& mu, int eps);

/// w_R -> (w_{R^lambda} + w_{R^lambda'}) / sqrt 2, written in the w bases
/// {w_T : T in Tab(lambda)} and {w_R : R in Tab_*(mu)}.
ComplexMatrix pair_branching_isometry(const Partition& lambda, const Partition& mu, int eps);

/// w_R -> w_{R^nu} between Tab_* bases; nu big, mu = nu minus (p, p).
ComplexMatrix symmetric_branching_isometry(const Partition& nu, const Partition& mu, int eps);

void require_symmetric(const Partition& nu);
void require_sign(int eps);

} // namespace eitff
