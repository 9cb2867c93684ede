#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eitff/linalg.hpp"
#include "eitff/permutation.hpp"
#include "eitff/young.hpp"

namespace eitff {

/// Young's orthogonal form of S_n on V_lambda, basis ordered canonically.
/// Generators are kept sparse: pi(s_k) has at most two entries per column.
class YoungRep {
public:
    explicit YoungRep(const Partition& lambda);

    const Partition& shape() const { return shape_; }
    int degree() const { return shape_.size(); }
    int dim() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
    const StandardTableau& tableau(int t) const { return tableaux_[t]; }

    /// Throws InvalidTableau if T is not a standard tableau of this shape.
    int index_of(const StandardTableau& T) const;

    /// [pi(s_k)]_{T,T} = 1 / D_T(k+1, k).
    double diagonal(int k, int t) const { return gens_[k].diag[t]; }
    /// Index of s_k T, or -1 when s_k T is not standard.
    int partner(int k, int t) const { return gens_[k].partner[t]; }
    double off_diagonal(int k, int t) const { return gens_[k].off[t]; }

    /// X <- pi(s_k) X.
    void apply_generator(int k, RealMatrix& x) const;
    void apply_generator(int k, ComplexMatrix& x) const;
    /// X <- pi(g) X.
    void apply(const Permutation& g, RealMatrix& x) const;
    void apply(const Permutation& g, ComplexMatrix& x) const;

private:
    template <typename M> void apply_generator_impl(int k, M& x) const;

    struct Generator {
        std::vector<double> diag;
        std::vector<int> partner;
        std::vector<double> off;
    };

    Partition shape_;
    std::vector<StandardTableau> tableaux_;
    std::unordered_map<std::string, int> index_;
    std::vector<Generator> gens_; // indexed by k, entry 0 unused
};

/// Tableaux above this count are refused outright.
inline constexpr long kMaxRepresentationDim = 200000;

/// Shared, immutable representation data; safe for concurrent readers.
std::shared_ptr<const YoungRep> young_rep(const Partition& lambda);

RealMatrix adjacent_transposition_matrix(const Partition& lambda, int k);
RealMatrix rep_matrix(const Partition& lambda, const Permutation& g);

/// Psi[T, R] = 1 if T = R^lambda; lambda must cover mu.
RealMatrix branching_isometry(const Partition& lambda, const Partition& mu);

/// t_k = (k n) for k < n, t_n = identity.
std::vector<Permutation> default_transversal(int n);
/// Even left coset representatives of A_{n-1} in A_n with t_k(n) = k.
std::vector<Permutation> even_transversal(int n);
/// Checks length n and t_k(n) = k, optionally that all are even.
void validate_transversal(const std::vector<Permutation>& t, int n, bool even);

} // namespace eitff
