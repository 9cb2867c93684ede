#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eitff/exact.hpp"
#include "eitff/fusion.hpp"
#include "eitff/linalg.hpp"
#include "eitff/permutation.hpp"
#include "eitff/young.hpp"

namespace eitff {

struct ConstructionOptions {
    /// Ambient dimensions above this are refused with ResourceLimit.
    long max_dim = 5000;
};

/// A set L of shapes from the up-set of mu, kept in up-set order.
struct LayerSelection {
    Partition mu;
    std::vector<Partition> layers;
};

/// Checks L is a nonempty subset of the up-set of mu and sorts it.
LayerSelection make_selection(const Partition& mu, const std::vector<Partition>& layers);

struct CanonicalSubsets {
    std::vector<Partition> even; // L_0: positions 2, 4, ... of the up-set
    std::vector<Partition> odd;  // L_1: positions 1, 3, ...
};
CanonicalSubsets canonical_subsets(const Partition& mu);
LayerSelection canonical_selection(const Partition& mu, int delta);

/// Phi_k = pi_lambda(t_k) Psi_{lambda, mu}.
FusionEnsemble single_layer_ensemble(const Partition& lambda, const Partition& mu,
                                     const std::optional<std::vector<Permutation>>& transversal = std::nullopt,
                                     const ConstructionOptions& options = {});

/// Phi_k = pi_L(t_k) Psi_L with Psi_L stacking sqrt(d_lambda / d_L) Psi_{lambda, mu}.
FusionEnsemble multi_layer_ensemble(const LayerSelection& sel,
                                    const std::optional<std::vector<Permutation>>& transversal = std::nullopt,
                                    const ConstructionOptions& options = {});

/// Block-diagonal sum of pi_lambda(g) over the layers.
ComplexMatrix layer_rep_matrix(const std::vector<Partition>& layers, const Permutation& g);

enum class SingleLayerFamily { TypeI, TypeII, TypeIII, EquichordalOnly };
const char* to_string(SingleLayerFamily f);

struct SingleLayerClass {
    SingleLayerFamily family = SingleLayerFamily::EquichordalOnly;
    int a = 0;
    int b = 0;
    int c = 0;
};

/// Which single layers are equi-isoclinic; everything else is only equichordal.
SingleLayerClass classify_single_layer(const Partition& lambda, const Partition& mu);

struct ExactParameters {
    BigInt d;
    BigInt r;
    BigInt n;
    Rational alpha; // (rn - d) / (d (n - 1))
};

ExactParameters single_layer_parameters(SingleLayerFamily family, int a, int b, int c = 0);
/// mu and lambda of a family member.
std::pair<Partition, Partition> single_layer_shapes(SingleLayerFamily family, int a, int b, int c = 0);

struct IsoclinicCertificate {
    Partition mu;
    int delta = 0;
    std::vector<Partition> layers;
    std::vector<BoxIndex> removable; // descending superdiagonal
    std::vector<Rational> s;         // one sum per removable box
    bool holds = false;              // all |s_q| equal: the distance condition
    bool sign_pattern = false;       // s_q = (-1)^{q + delta} beta
    Rational beta;
    Rational beta_squared;           // from the closed form in d_L, d_mu, n
    Rational alpha;
    BigInt d;                        // d_L
    BigInt r;                        // d_mu
    BigInt n;
};

IsoclinicCertificate isoclinic_certificate(const Partition& mu, int delta);
/// Same sums for any selection; delta outside {0, 1} skips the sign pattern.
IsoclinicCertificate selection_certificate(const LayerSelection& sel, int delta = -1);

/// Every (mu, delta) with |mu| + 1 <= max_n whose certificate holds.
std::vector<IsoclinicCertificate> search_isoclinic(int max_n);

struct FamilyMember {
    Partition mu;
    std::vector<int> parameters;
    IsoclinicCertificate even;
    IsoclinicCertificate odd;
};

/// mu = ((e+f+g)^a, (e+f)^b, e^c) from h | 2af, b | (a+h)f, 0 < b < h/2.
FamilyMember three_part_family(int a, int f, int h, int b);
/// mu = ((a+b+c+e)^a, (a+b+c)^b, (a+b)^c, a^e) with e = b^2/c + b.
FamilyMember four_part_family(int a, int b, int c);

/// Ensemble rho_L^eps(t_k) Psi_L^eps over field_for(mu), with (d_L/2, d_mu/2, n).
FusionEnsemble alternating_ensemble(const LayerSelection& sel, int eps,
                                    const std::optional<std::vector<Permutation>>& transversal = std::nullopt,
                                    const ConstructionOptions& options = {});

/// rho_L^eps(g) in the basis used by alternating_ensemble.
ComplexMatrix alternating_rep_matrix(const LayerSelection& sel, int eps, const Permutation& g);

struct AlternatingParameters {
    Field field = Field::Real;
    BigInt d;
    BigInt r;
    BigInt n;
    Rational alpha;
    Partition mu;
};

/// mu = ((a+c)^a, a^c), L = L_delta.
AlternatingParameters alternating_parameters(int a, int c, int delta);

struct DecompositionResult {
    bool holds = false;
    double residual = 0; // worst entry of the mismatch over all k
};

/// Compares pi_L(t_k) Psi_L, written in the eigenbases of U, with the two
/// A_n-built blocks rho^+ and rho^-.
DecompositionResult decomposition_check(const LayerSelection& sel,
                                        const std::optional<std::vector<Permutation>>& transversal = std::nullopt,
                                        double tolerance = kDefaultTolerance);

struct LabelledMatrix {
    std::string label;
    ComplexMatrix matrix;
};

/// Blocks rho(t_x) W where rho(t_x) multiplies the generators along each word.
FusionEnsemble generic_orbit_ensemble(const std::vector<LabelledMatrix>& generators,
                                      const std::vector<std::vector<std::string>>& transversal_words,
                                      const ComplexMatrix& w);

struct SnTableRow {
    SingleLayerFamily family;
    int a, b, c;
    ExactParameters params;
    Partition mu, lambda;
};
/// Single-layer EITFFs with d <= max_dim: types I/II as 2 <= a <= b, type III as a <= b, c >= 2.
std::vector<SnTableRow> sn_table(long max_dim);

struct AnTableRow {
    int a, c, delta;
    AlternatingParameters params;
};
/// Alternating two-part ensembles with d <= max_dim, the smaller of the two deltas.
std::vector<AnTableRow> an_table(long max_dim);

} // namespace eitff
