#include "doctest.h"

#include <random>

#include "eitff/alternating_rep.hpp"
#include "eitff/constructions.hpp"
#include "eitff/error.hpp"

using namespace eitff;

namespace {

Permutation random_even(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    auto g = Permutation::from_images(img);
    return g.sign() == 1 ? g : Permutation::transposition(n, 1, 2) * g;
}

std::vector<Permutation> alternating_group(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> out;
    do {
        auto g = Permutation::from_images(img);
        if (g.sign() == 1) out.push_back(g);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Partition> symmetric_shapes(int lo, int hi) {
    std::vector<Partition> out;
    for (int n = lo; n <= hi; ++n)
        for (const auto& p : partitions_of(n))
            if (p.is_symmetric()) out.push_back(p);
    return out;
}

ComplexMatrix pi(const Partition& l, const Permutation& g) { return rep_matrix(l, g).cast<cd>(); }

ErrorKind kind_of(auto f) {
    try { f(); } catch (const Error& e) { return e.kind(); }
    return ErrorKind::NumericalFailure;
}

} // namespace

TEST_CASE("field and size rules") {
    CHECK(quarter_turns(Partition({3, 1, 1})) == 2);
    CHECK(field_for(Partition({3, 1, 1})) == Field::Real);
    CHECK(field_for(Partition({3, 2, 1})) == Field::Real);
    CHECK(field_for(Partition({4, 1, 1, 1})) == Field::Complex);
    CHECK(field_for(Partition({4, 4, 2, 2})) == Field::Complex);
    CHECK(is_big(Partition({3, 2, 1})));
    CHECK(!is_big(Partition({3, 1, 1})));
    CHECK(kind_of([] { field_for(Partition({3, 2})); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { an_generator_matrix(Partition({2, 1, 1}), 1, 2); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { an_generator_matrix(Partition({2, 2}), 1, 2); }) == ErrorKind::TooSmall);
    CHECK(kind_of([] { eigenspace_injection(Partition({3, 1, 1}), 0); }) == ErrorKind::ConstraintViolation);
    CHECK(kind_of([] { an_generator_matrix(Partition({3, 1, 1}), 1, 5); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { pair_injection(Partition({3, 2, 1}), Partition({3, 1, 1}), 1); }) == ErrorKind::SymmetricLambda);
    CHECK(kind_of([] { pair_reference_tableau(Partition({4, 2, 1}), Partition({3, 2, 1})); }) ==
          ErrorKind::OddDistinctParts);
}

TEST_CASE("reference tableaux") {
    CHECK(reference_tableau(Partition({3, 1, 1})).rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4}, {5}});
    CHECK(reference_tableau(Partition({3, 2, 1})).rows() == std::vector<std::vector<int>>{{1, 2, 3}, {4, 6}, {5}});
    CHECK(pair_reference_tableau(Partition({4, 1, 1}), Partition({3, 1, 1})).rows() ==
          std::vector<std::vector<int>>{{1, 2, 3, 6}, {4}, {5}});
}

TEST_CASE("associator is an involution commuting with even permutations only") {
    std::mt19937 rng(5);
    for (const auto& nu : symmetric_shapes(5, 8)) {
        const int n = nu.size();
        auto u = associator_unitary(nu);
        const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
        CHECK(max_abs(u * u - id) < 1e-12);
        CHECK(isometry_defect(u) < 1e-12);
        for (int k = 2; k < n; ++k) {
            auto g = Permutation::adjacent(n, 1) * Permutation::adjacent(n, k);
            CHECK(max_abs(u * pi(nu, g) - pi(nu, g) * u) < 1e-12);
        }
        auto s1 = pi(nu, Permutation::adjacent(n, 1));
        CHECK(max_abs(u * s1 + s1 * u) < 1e-12);
        for (int trial = 0; trial < 5; ++trial) {
            auto g = random_even(n, rng);
            CHECK(max_abs(u * pi(nu, g) - pi(nu, g) * u) < 1e-10);
        }
    }
}

TEST_CASE("eigenspace injections split V_nu") {
    for (const auto& nu : symmetric_shapes(5, 8)) {
        auto u = associator_unitary(nu);
        const int d = static_cast<int>(u.rows());
        const auto id = ComplexMatrix::Identity(d, d);
        auto jp = eigenspace_injection(nu, 1), jm = eigenspace_injection(nu, -1);
        CHECK(2 * jp.cols() == d);
        CHECK(isometry_defect(jp) < 1e-12);
        CHECK(max_abs(u * jp - jp) < 1e-12);
        CHECK(max_abs(u * jm + jm) < 1e-12);
        CHECK(max_abs(jp * jp.adjoint() - 0.5 * (id + u)) < 1e-12);
        CHECK(max_abs(jm * jm.adjoint() - 0.5 * (id - u)) < 1e-12);
        CHECK(static_cast<int>(tab_star_indices(nu).size()) == d / 2);
    }
}

TEST_CASE("sparse generators equal the compressed symmetric action") {
    for (const auto& nu : symmetric_shapes(5, 8))
        for (int eps : {1, -1}) {
            const int n = nu.size();
            auto j = eigenspace_injection(nu, eps);
            for (int k = 2; k < n; ++k) {
                auto g = Permutation::adjacent(n, 1) * Permutation::adjacent(n, k);
                auto expected = ComplexMatrix(j.adjoint() * pi(nu, g) * j);
                auto rho = an_generator_matrix(nu, eps, k);
                CHECK(max_abs(rho - expected) < 1e-12);
                CHECK(isometry_defect(rho) < 1e-12);
                if (field_for(nu) == Field::Real) CHECK(imaginary_size(rho) == 0.0);
            }
        }
}

TEST_CASE("rho is a homomorphism on random even pairs") {
    std::mt19937 rng(17);
    for (const auto& nu : symmetric_shapes(5, 8))
        for (int eps : {1, -1}) {
            const int n = nu.size();
            auto rep = alternating_rep(nu, eps);
            for (int trial = 0; trial < 50; ++trial) {
                auto g = random_even(n, rng), h = random_even(n, rng);
                auto lhs = an_rep_matrix(nu, eps, g * h);
                CHECK(max_abs(lhs - an_rep_matrix(nu, eps, g) * an_rep_matrix(nu, eps, h)) < 1e-10);
                ComplexMatrix x = ComplexMatrix::Identity(rep->dim(), rep->dim());
                rep->apply(g * h, x);
                CHECK(max_abs(x - lhs) < 1e-10);
            }
            ComplexMatrix x = ComplexMatrix::Identity(rep->dim(), rep->dim());
            CHECK(kind_of([&] { rep->apply(Permutation::adjacent(n, 1), x); }) == ErrorKind::OddPermutation);
        }
}

TEST_CASE("the two pieces are inequivalent irreducibles") {
    for (const auto& nu : symmetric_shapes(5, 6)) {
        auto group = alternating_group(nu.size());
        double pp = 0, mm = 0, pm = 0;
        for (const auto& g : group) {
            cd a = an_rep_matrix(nu, 1, g).trace(), b = an_rep_matrix(nu, -1, g).trace();
            pp += std::norm(a);
            mm += std::norm(b);
            pm += (a * std::conj(b)).real();
        }
        const double order = static_cast<double>(group.size());
        CHECK(pp / order == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(mm / order == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(pm / order) < 1e-9);
    }
}

TEST_CASE("pair associator and injections") {
    std::mt19937 rng(23);
    for (const auto& mu : symmetric_shapes(5, 8)) {
        if (is_big(mu)) continue;
        const int n = mu.size() + 1;
        auto shapes = up_set(mu);
        auto u = pair_associator_unitary(mu);
        CHECK(max_abs(u * u - ComplexMatrix::Identity(u.rows(), u.cols())) < 1e-12);
        for (int trial = 0; trial < 5; ++trial) {
            auto g = random_even(n, rng);
            auto big = layer_rep_matrix(shapes, g);
            CHECK(max_abs(u * big - big * u) < 1e-10);
        }
        for (const auto& lambda : shapes) {
            if (lambda.is_symmetric()) continue;
            Partition lt = transpose(lambda);
            for (int eps : {1, -1}) {
                auto j = pair_injection(lambda, mu, eps);
                CHECK(isometry_defect(j) < 1e-12);
                for (int trial = 0; trial < 5; ++trial) {
                    auto g = random_even(n, rng), h = random_even(n, rng);
                    auto rho = [&](const Permutation& x) {
                        ComplexMatrix block = ComplexMatrix::Zero(j.rows(), j.rows());
                        const auto d = j.cols();
                        block.topLeftCorner(d, d) = pi(lambda, x);
                        block.bottomRightCorner(d, d) = pi(lt, x);
                        return ComplexMatrix(j.adjoint() * block * j);
                    };
                    // compressed pair representation is a homomorphism with the character of lambda
                    CHECK(max_abs(rho(g * h) - rho(g) * rho(h)) < 1e-10);
                    CHECK(std::abs(rho(g).trace() - pi(lambda, g).trace()) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("branching isometries intertwine the restriction to A_{n-1}") {
    Partition mu({3, 1, 1});
    const int n = 6;
    for (int eps : {1, -1}) {
        for (const auto& lambda : up_set(mu)) {
            if (lambda.is_symmetric()) continue;
            Partition lt = transpose(lambda);
            auto j = pair_injection(lambda, mu, eps);
            auto psi = pair_branching_isometry(lambda, mu, eps);
            CHECK(psi.rows() == j.cols());
            CHECK(isometry_defect(psi) < 1e-12);
            for (int k = 2; k < n - 1; ++k) {
                auto g = Permutation::adjacent(n, 1) * Permutation::adjacent(n, k);
                ComplexMatrix block = ComplexMatrix::Zero(j.rows(), j.rows());
                const auto d = j.cols();
                block.topLeftCorner(d, d) = pi(lambda, g);
                block.bottomRightCorner(d, d) = pi(lt, g);
                ComplexMatrix rho = j.adjoint() * block * j;
                CHECK(max_abs(rho * psi - psi * an_generator_matrix(mu, eps, k)) < 1e-12);
            }
        }
        Partition nu({3, 2, 1});
        auto psi = symmetric_branching_isometry(nu, mu, eps);
        CHECK(psi.rows() == 8);
        CHECK(psi.cols() == 3);
        CHECK(isometry_defect(psi) < 1e-12);
        for (int k = 2; k < n - 1; ++k)
            CHECK(max_abs(an_generator_matrix(nu, eps, k) * psi - psi * an_generator_matrix(mu, eps, k)) < 1e-12);
    }
    CHECK(kind_of([] { symmetric_branching_isometry(Partition({3, 2, 1}), Partition({2, 2, 1}), 1); }) ==
          ErrorKind::NotSymmetric);
}
