#include "eitff/fusion.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "eitff/error.hpp"

namespace eitff {

FusionEnsemble make_ensemble(Field field, std::vector<ComplexMatrix> blocks, nlohmann::json metadata) {
    FusionEnsemble e;
    e.field = field;
    e.n = static_cast<int>(blocks.size());
    if (e.n > 0) {
        e.d = static_cast<int>(blocks[0].rows());
        e.r = static_cast<int>(blocks[0].cols());
    }
    e.blocks = std::move(blocks);
    e.metadata = metadata.is_null() ? nlohmann::json::object() : std::move(metadata);
    validate_ensemble(e);
    return e;
}

void validate_ensemble(const FusionEnsemble& e, double isometry_tolerance) {
    if (e.n < 1 || e.d < 1 || e.r < 1) fail(ErrorKind::InvalidEnsemble, "ensemble needs d, r, n >= 1");
    if (e.r > e.d) fail(ErrorKind::InvalidEnsemble, "subspace dimension exceeds ambient dimension");
    if (static_cast<int>(e.blocks.size()) != e.n) fail(ErrorKind::InvalidEnsemble, "block count differs from n");
    for (int j = 0; j < e.n; ++j) {
        const auto& b = e.blocks[j];
        if (b.rows() != e.d || b.cols() != e.r)
            fail(ErrorKind::SizeMismatch, "block " + std::to_string(j + 1) + " is not d x r");
        if (!b.allFinite()) fail(ErrorKind::InvalidEnsemble, "block " + std::to_string(j + 1) + " has non-finite entries");
        if (e.field == Field::Real && imaginary_size(b) > 0)
            fail(ErrorKind::InvalidEnsemble, "real ensemble with complex entries");
        if (isometry_defect(b) > isometry_tolerance)
            fail(ErrorKind::NotIsometry, "block " + std::to_string(j + 1) + " is not an isometry");
    }
}

ComplexMatrix synthesis_matrix(const FusionEnsemble& e) {
    ComplexMatrix phi(e.d, static_cast<Eigen::Index>(e.r) * e.n);
    for (int j = 0; j < e.n; ++j) phi.middleCols(static_cast<Eigen::Index>(j) * e.r, e.r) = e.blocks[j];
    return phi;
}

ComplexMatrix fusion_frame_operator(const FusionEnsemble& e) {
    ComplexMatrix s = ComplexMatrix::Zero(e.d, e.d);
    for (const auto& b : e.blocks) s.noalias() += b * b.adjoint();
    return s;
}

double tightness_residual(const FusionEnsemble& e) {
    ComplexMatrix s = fusion_frame_operator(e);
    s.diagonal().array() -= double(e.r) * e.n / e.d;
    return max_abs(s);
}

ComplexMatrix fusion_gram(const FusionEnsemble& e) {
    ComplexMatrix phi = synthesis_matrix(e);
    return phi.adjoint() * phi;
}

namespace {

void check_pair(const FusionEnsemble& e, int i, int j) {
    if (i < 1 || j < 1 || i > e.n || j > e.n) fail(ErrorKind::IndexOutOfRange, "subspace index out of range");
}

std::vector<double> angles_from(const ComplexMatrix& g) {
    Eigen::JacobiSVD<ComplexMatrix> svd(g);
    std::vector<double> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        out.push_back(std::acos(std::clamp(svd.singularValues()(k), 0.0, 1.0)));
    return out;
}

PairReport pair_report(const FusionEnsemble& e, int i, int j) {
    PairReport p;
    p.i = i;
    p.j = j;
    ComplexMatrix g = cross_gram(e, i, j);
    p.principal_angles = angles_from(g);
    double top = std::cos(p.principal_angles.front());
    p.spectral = std::sqrt(std::max(0.0, 1.0 - top * top));
    double fro = g.squaredNorm();
    p.chordal = std::sqrt(std::max(0.0, e.r - fro));
    p.alpha = fro / e.r;
    ComplexMatrix gg = g.adjoint() * g;
    gg.diagonal().array() -= p.alpha;
    p.isoclinic_defect = max_abs(gg);
    return p;
}

} // namespace

ComplexMatrix cross_gram(const FusionEnsemble& e, int i, int j) {
    check_pair(e, i, j);
    return e.blocks[i - 1].adjoint() * e.blocks[j - 1];
}

std::vector<double> principal_angles(const FusionEnsemble& e, int i, int j) {
    return angles_from(cross_gram(e, i, j));
}

PairDistances pairwise_distances(const FusionEnsemble& e, int i, int j) {
    check_pair(e, i, j);
    auto p = pair_report(e, i, j);
    return {p.spectral, p.chordal};
}

WelchBounds welch_bounds(int d, int r, int n) {
    if (n < 2 || d < 1 || r < 1 || r > d) fail(ErrorKind::DegenerateParameters, "Welch bounds need n >= 2 and 1 <= r <= d");
    double spectral2 = double(n) * (d - r) / (double(d) * (n - 1));
    return {std::sqrt(spectral2), std::sqrt(r * spectral2)};
}

std::optional<double> isoclinism_check(const FusionEnsemble& e, double tolerance) {
    if (e.n < 2) return std::nullopt;
    double lo = INFINITY, hi = -INFINITY, sum = 0;
    int count = 0;
    for (int i = 1; i <= e.n; ++i) {
        for (int j = i + 1; j <= e.n; ++j) {
            auto p = pair_report(e, i, j);
            if (p.isoclinic_defect > tolerance) return std::nullopt;
            lo = std::min(lo, p.alpha);
            hi = std::max(hi, p.alpha);
            sum += p.alpha;
            ++count;
        }
    }
    if (hi - lo > tolerance) return std::nullopt;
    return sum / count;
}

const char* to_string(Classification c) {
    switch (c) {
    case Classification::None: return "None";
    case Classification::TFF: return "TFF";
    case Classification::ECTFF: return "ECTFF";
    case Classification::EITFF: return "EITFF";
    }
    return "None";
}

CertificationReport certify(const FusionEnsemble& e, double tolerance) {
    validate_ensemble(e);
    CertificationReport rep;
    rep.field = e.field;
    rep.d = e.d;
    rep.r = e.r;
    rep.n = e.n;
    rep.tolerance = tolerance;
    rep.tight_constant = double(e.r) * e.n / e.d;
    rep.tightness_residual = tightness_residual(e);
    rep.tight = rep.tightness_residual <= tolerance * std::max(1.0, rep.tight_constant);

    if (e.n >= 2) {
        auto w = welch_bounds(e.d, e.r, e.n);
        rep.welch_spectral = w.spectral;
        rep.welch_chordal = w.chordal;
        rep.expected_alpha = (double(e.r) * e.n - e.d) / (double(e.d) * (e.n - 1));
    }

    rep.spectral_min = INFINITY;
    rep.chordal_min = INFINITY;
    double fro_lo = INFINITY, fro_hi = -INFINITY;
    double alpha_lo = INFINITY, alpha_hi = -INFINITY, alpha_sum = 0;
    bool isoclinic = e.n >= 2;
    for (int i = 1; i <= e.n; ++i) {
        for (int j = i + 1; j <= e.n; ++j) {
            auto p = pair_report(e, i, j);
            rep.spectral_min = std::min(rep.spectral_min, p.spectral);
            rep.chordal_min = std::min(rep.chordal_min, p.chordal);
            fro_lo = std::min(fro_lo, p.alpha * e.r);
            fro_hi = std::max(fro_hi, p.alpha * e.r);
            alpha_lo = std::min(alpha_lo, p.alpha);
            alpha_hi = std::max(alpha_hi, p.alpha);
            alpha_sum += p.alpha;
            if (p.isoclinic_defect > tolerance) isoclinic = false;
            rep.pairs.push_back(std::move(p));
        }
    }
    if (e.n < 2) {
        rep.spectral_min = 0;
        rep.chordal_min = 0;
    }
    rep.equichordal = e.n >= 2 && fro_hi - fro_lo <= tolerance * std::max(1.0, double(e.r));
    rep.isoclinic = isoclinic && alpha_hi - alpha_lo <= tolerance;
    if (rep.isoclinic) {
        double a = alpha_sum / rep.pairs.size();
        rep.alpha = a;
        double denom = e.r - e.d * a;
        if (denom > tolerance) rep.lemmens_seidel_bound = e.d * (1 - a) / denom;
    }

    if (!rep.tight) rep.classification = Classification::None;
    else if (rep.isoclinic) rep.classification = Classification::EITFF;
    else if (rep.equichordal) rep.classification = Classification::ECTFF;
    else rep.classification = Classification::TFF;
    return rep;
}

namespace {

template <typename Matrix>
std::vector<ComplexMatrix> complement_blocks(const Matrix& gram, int d, int r, int n) {
    using Vector = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1>;
    int rn = r * n;
    int m = rn - d;
    Matrix c = Matrix::Identity(rn, rn) - (double(d) / rn) * gram;
    c *= double(rn) / m;
    c = (0.5 * (c + c.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    if (es.info() != Eigen::Success) fail(ErrorKind::NumericalFailure, "eigendecomposition failed");
    // Eigenvalues ascend; the top m carry the complement.
    Vector top = es.eigenvalues().tail(m).cwiseMax(0.0).cwiseSqrt();
    Matrix synth = top.asDiagonal() * es.eigenvectors().rightCols(m).adjoint();
    std::vector<ComplexMatrix> blocks;
    for (int j = 0; j < n; ++j) {
        Matrix b = synth.middleCols(static_cast<Eigen::Index>(j) * r, r);
        // Polar factor: nearest isometry, leaves cross-Grams unchanged to rounding.
        Eigen::JacobiSVD<Matrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Matrix polar = svd.matrixU() * svd.matrixV().adjoint();
        blocks.push_back(polar.template cast<cd>());
    }
    return blocks;
}

} // namespace

FusionEnsemble naimark_complement(const FusionEnsemble& e, double tolerance) {
    validate_ensemble(e);
    if (e.r * e.n <= e.d) fail(ErrorKind::FullDimension, "complement needs d < rn");
    double tight_constant = double(e.r) * e.n / e.d;
    if (tightness_residual(e) > tolerance * std::max(1.0, tight_constant))
        fail(ErrorKind::NotTight, "Naimark complement needs a tight fusion frame");
    ComplexMatrix gram = fusion_gram(e);
    std::vector<ComplexMatrix> blocks;
    if (e.field == Field::Real) {
        RealMatrix g = gram.real();
        blocks = complement_blocks(g, e.d, e.r, e.n);
    } else {
        blocks = complement_blocks(gram, e.d, e.r, e.n);
    }
    nlohmann::json meta = {{"construction", "naimark-complement"}, {"source", e.metadata}};
    return make_ensemble(e.field, std::move(blocks), meta);
}

double automorphism_residual(const FusionEnsemble& e, const ComplexMatrix& u, const Permutation& sigma) {
    if (u.rows() != e.d || u.cols() != e.d) fail(ErrorKind::SizeMismatch, "U must be d x d");
    if (sigma.degree() != e.n) fail(ErrorKind::SizeMismatch, "sigma must permute the n subspaces");
    double worst = 0;
    for (int j = 1; j <= e.n; ++j) {
        const auto& target = e.blocks[sigma(j) - 1];
        ComplexMatrix moved = u * e.blocks[j - 1];
        ComplexMatrix outside = moved - target * (target.adjoint() * moved);
        worst = std::max(worst, max_abs(outside));
    }
    return worst;
}

bool automorphism_witness(const FusionEnsemble& e, const ComplexMatrix& u, const Permutation& sigma, double tolerance) {
    if (u.rows() != u.cols() || isometry_defect(u) > std::max(tolerance, 1e-8))
        fail(ErrorKind::NotUnitary, "witness matrix is not unitary");
    return automorphism_residual(e, u, sigma) <= tolerance;
}

} // namespace eitff
