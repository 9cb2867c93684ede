#include "doctest.h"

#include <cmath>
#include <random>

#include "eitff/constructions.hpp"
#include "eitff/error.hpp"
#include "eitff/fusion.hpp"
#include "eitff/symmetric_rep.hpp"

using namespace eitff;

namespace {

ComplexMatrix column(double a, double b) {
    ComplexMatrix m(2, 1);
    m << a, b;
    return m;
}

ComplexMatrix projection(const ComplexMatrix& phi) { return phi * phi.adjoint(); }

ErrorKind kind_of(auto f) {
    try { f(); } catch (const Error& e) { return e.kind(); }
    return ErrorKind::NumericalFailure;
}

} // namespace

TEST_CASE("Welch bounds") {
    auto w = welch_bounds(5, 2, 5);
    CHECK(w.spectral == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
    CHECK(w.chordal == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
    auto mb = welch_bounds(2, 1, 3);
    CHECK(mb.spectral == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
    CHECK(kind_of([] { welch_bounds(5, 2, 1); }) == ErrorKind::DegenerateParameters);
    CHECK(kind_of([] { welch_bounds(2, 3, 4); }) == ErrorKind::DegenerateParameters);
}

TEST_CASE("Mercedes-Benz lines") {
    const double h = std::sqrt(3.0) / 2;
    auto e = make_ensemble(Field::Real, {column(-h, -0.5), column(h, -0.5), column(0, 1)});
    auto rep = certify(e);
    CHECK(rep.classification == Classification::EITFF);
    CHECK(rep.tight_constant == doctest::Approx(1.5));
    REQUIRE(rep.alpha);
    CHECK(*rep.alpha == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(rep.welch_spectral);
    CHECK(rep.spectral_min == doctest::Approx(*rep.welch_spectral).epsilon(1e-12));
    for (const auto& p : rep.pairs) CHECK(p.principal_angles[0] == doctest::Approx(M_PI / 3).epsilon(1e-12));

    // the same lines from (2,1) over (1,1); the canonical basis lists the displayed one in reverse
    auto built = single_layer_ensemble(Partition({2, 1}), Partition({1, 1}));
    REQUIRE(built.n == 3);
    auto lines = std::vector<ComplexMatrix>{column(-0.5, -h), column(-0.5, h), column(1, 0)};
    // the displayed example composes left to right, which swaps the first two lines
    for (int k = 0; k < 3; ++k) {
        double best = 1;
        for (const auto& l : lines) best = std::min(best, max_abs(projection(built.blocks[k]) - projection(l)));
        CHECK(best < 1e-12);
    }
    CHECK(max_abs(projection(built.blocks[2]) - projection(lines[2])) < 1e-12);
}

TEST_CASE("validation errors") {
    CHECK(kind_of([] { make_ensemble(Field::Real, {column(1, 1)}); }) == ErrorKind::NotIsometry);
    ComplexMatrix c(2, 1);
    c << cd(0, 1), 0;
    CHECK(kind_of([&] { make_ensemble(Field::Real, {c}); }) != ErrorKind::NumericalFailure);
    CHECK_NOTHROW(make_ensemble(Field::Complex, {c}));
    CHECK(kind_of([] { make_ensemble(Field::Real, {column(1, 0), ComplexMatrix::Identity(2, 2)}); }) !=
          ErrorKind::NumericalFailure);
    auto basis = make_ensemble(Field::Real, {column(1, 0), column(0, 1)});
    CHECK(kind_of([&] { naimark_complement(basis); }) == ErrorKind::FullDimension);
    auto skew = make_ensemble(Field::Real, {column(1, 0), column(1, 0), column(0, 1)});
    CHECK(kind_of([&] { naimark_complement(skew); }) == ErrorKind::NotTight);
    CHECK(certify(skew).classification == Classification::None);
}

TEST_CASE("principal angles and distances") {
    auto e = make_ensemble(Field::Real, {column(1, 0), column(0, 1), column(std::sqrt(0.5), std::sqrt(0.5))});
    CHECK(principal_angles(e, 1, 2)[0] == doctest::Approx(M_PI / 2));
    CHECK(principal_angles(e, 1, 3)[0] == doctest::Approx(M_PI / 4));
    auto dist = pairwise_distances(e, 1, 3);
    CHECK(dist.chordal == doctest::Approx(std::sqrt(0.5)));
    CHECK(max_abs(cross_gram(e, 1, 2)) == 0.0);
}

TEST_CASE("EITFF(5,2,5) certification and automorphisms") {
    auto e = single_layer_ensemble(Partition({3, 2}), Partition({2, 2}));
    auto rep = certify(e);
    CHECK(rep.classification == Classification::EITFF);
    CHECK(rep.tightness_residual < 1e-12);
    REQUIRE(rep.alpha);
    CHECK(*rep.alpha == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(rep.lemmens_seidel_bound);
    CHECK(isoclinism_check(e).has_value());
    for (int k = 1; k < 5; ++k) {
        auto s = Permutation::adjacent(5, k);
        ComplexMatrix u = rep_matrix(Partition({3, 2}), s).cast<cd>();
        CHECK(automorphism_witness(e, u, s));
        CHECK(!automorphism_witness(e, u, Permutation(5)));
    }
    CHECK(kind_of([&] { automorphism_witness(e, 2.0 * ComplexMatrix::Identity(5, 5), Permutation(5)); }) ==
          ErrorKind::NotUnitary);
}

TEST_CASE("perturbing one block breaks equi-isoclinism") {
    auto e = single_layer_ensemble(Partition({3, 2}), Partition({2, 2}));
    std::mt19937 rng(1);
    std::normal_distribution<double> noise(0, 1e-3);
    ComplexMatrix b = e.blocks[0];
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) += noise(rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(b);
    e.blocks[0] = qr.householderQ() * ComplexMatrix::Identity(b.rows(), b.cols());
    auto rep = certify(e);
    CHECK(rep.classification != Classification::EITFF);
    CHECK(!rep.tight);
}

TEST_CASE("Naimark complement of EITFF(16,6,6)") {
    auto e = single_layer_ensemble(Partition({3, 2, 1}), Partition({3, 1, 1}));
    REQUIRE(e.d == 16);
    REQUIRE(e.r == 6);
    REQUIRE(e.n == 6);
    auto c = naimark_complement(e);
    CHECK(c.d == 20);
    CHECK(c.field == Field::Real);
    auto rep = certify(c);
    CHECK(rep.classification == Classification::EITFF);
    REQUIRE(rep.alpha);
    CHECK(*rep.alpha == doctest::Approx(4.0 / 25).epsilon(1e-9));
    const double rn = 36;
    ComplexMatrix expected = (rn / (rn - 16)) * (ComplexMatrix::Identity(36, 36) - (16 / rn) * fusion_gram(e));
    CHECK(max_abs(fusion_gram(c) - expected) < 1e-9);
    auto back = naimark_complement(c);
    CHECK(back.d == 16);
    CHECK(max_abs(fusion_gram(back) - fusion_gram(e)) < 1e-7);
}
