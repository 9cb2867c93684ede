#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "eitff/linalg.hpp"
#include "eitff/permutation.hpp"

namespace eitff {

inline constexpr double kDefaultTolerance = 1e-9;

/// n isometries Phi_j : F^r -> F^d, stored as complex d x r blocks. For
/// Field::Real every imaginary part is zero.
struct FusionEnsemble {
    Field field = Field::Real;
    int d = 0;
    int r = 0;
    int n = 0;
    std::vector<ComplexMatrix> blocks;
    nlohmann::json metadata = nlohmann::json::object();
};

/// Builds an ensemble and checks shapes, isometry and field.
FusionEnsemble make_ensemble(Field field, std::vector<ComplexMatrix> blocks, nlohmann::json metadata = {});
void validate_ensemble(const FusionEnsemble& e, double isometry_tolerance = 1e-8);

/// [Phi_1 ... Phi_n], d x rn.
ComplexMatrix synthesis_matrix(const FusionEnsemble& e);
/// sum_j Phi_j Phi_j^*.
ComplexMatrix fusion_frame_operator(const FusionEnsemble& e);
/// max |S - (rn/d) I|.
double tightness_residual(const FusionEnsemble& e);
/// Phi^* Phi, the rn x rn fusion Gram.
ComplexMatrix fusion_gram(const FusionEnsemble& e);

/// Phi_i^* Phi_j, 1-based indices.
ComplexMatrix cross_gram(const FusionEnsemble& e, int i, int j);
/// Ascending angles in [0, pi/2].
std::vector<double> principal_angles(const FusionEnsemble& e, int i, int j);

struct PairDistances {
    double spectral = 0;
    double chordal = 0;
};
PairDistances pairwise_distances(const FusionEnsemble& e, int i, int j);

struct WelchBounds {
    double spectral = 0;
    double chordal = 0;
};
WelchBounds welch_bounds(int d, int r, int n);

/// Common alpha with G_ij^* G_ij = alpha I for all i != j, if any.
std::optional<double> isoclinism_check(const FusionEnsemble& e, double tolerance = kDefaultTolerance);

enum class Classification { None, TFF, ECTFF, EITFF };
const char* to_string(Classification c);

struct PairReport {
    int i = 0;
    int j = 0;
    std::vector<double> principal_angles;
    double spectral = 0;
    double chordal = 0;
    double alpha = 0;           // ||G||_F^2 / r
    double isoclinic_defect = 0; // max |G^* G - alpha I|
};

struct CertificationReport {
    Field field = Field::Real;
    int d = 0;
    int r = 0;
    int n = 0;
    double tolerance = kDefaultTolerance;
    double tight_constant = 0; // rn / d
    double tightness_residual = 0;
    bool tight = false;
    double spectral_min = 0;
    double chordal_min = 0;
    std::optional<double> welch_spectral;
    std::optional<double> welch_chordal;
    bool equichordal = false;
    bool isoclinic = false;
    std::optional<double> alpha;
    std::optional<double> expected_alpha; // (rn - d) / (d (n - 1))
    std::optional<double> lemmens_seidel_bound;
    Classification classification = Classification::None;
    std::vector<PairReport> pairs;
};

CertificationReport certify(const FusionEnsemble& e, double tolerance = kDefaultTolerance);

/// Ensemble whose fusion Gram is (rn/(rn-d)) (I - (d/rn) Phi^* Phi).
FusionEnsemble naimark_complement(const FusionEnsemble& e, double tolerance = kDefaultTolerance);

/// max over j of |(I - P_{sigma(j)}) U Phi_j|; zero iff U P_j U^* = P_{sigma(j)} for all j.
double automorphism_residual(const FusionEnsemble& e, const ComplexMatrix& u, const Permutation& sigma);
bool automorphism_witness(const FusionEnsemble& e, const ComplexMatrix& u, const Permutation& sigma,
                          double tolerance = kDefaultTolerance);

} // namespace eitff
