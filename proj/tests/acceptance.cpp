// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "eitff/alternating_rep.hpp"
#include "eitff/constructions.hpp"
#include "eitff/symmetric_rep.hpp"

using namespace eitff;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) o.require(false, "runtime over " + std::to_string(limit_seconds) + " s");
    std::printf("%s [%d] %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(img);
}

bool is_eitff_with(const CertificationReport& rep, double alpha, double tol) {
    return rep.classification == Classification::EITFF && rep.alpha && std::abs(*rep.alpha - alpha) <= tol;
}

// Every S_n generator permutes the subspaces as it permutes indices.
bool sn_witnesses(const FusionEnsemble& e, const Partition& lambda) {
    for (int k = 1; k < e.n; ++k) {
        auto s = Permutation::adjacent(e.n, k);
        if (!automorphism_witness(e, rep_matrix(lambda, s).cast<cd>(), s)) return false;
    }
    return true;
}

struct SnRow {
    long d, r, n;
    Rational alpha;
};

struct AnRow {
    Field field;
    long d, r, n;
    Rational alpha;
};

} // namespace

int main() {
    std::vector<std::pair<FusionEnsemble, Partition>> sn_built;
    std::vector<std::pair<FusionEnsemble, LayerSelection>> an_built;

    criterion(1, "EITFF(5,2,5) from lambda=(3,2), mu=(2,2)", 1.0, [&](Outcome& o) {
        Partition lambda({3, 2});
        auto e = single_layer_ensemble(lambda, Partition({2, 2}));
        o.require(e.d == 5 && e.r == 2 && e.n == 5, "parameters");
        o.require(tightness_residual(e) <= 1e-9, "tightness residual");
        int pairs = 0;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                auto g = cross_gram(e, i, j);
                o.require(max_abs(g.adjoint() * g - 0.25 * ComplexMatrix::Identity(2, 2)) <= 1e-9, "cross-Gram");
                ++pairs;
            }
        o.require(pairs == 10, "pair count");
        auto rep = certify(e);
        o.require(std::abs(rep.spectral_min - std::sqrt(3.0) / 2) <= 1e-7, "spectral distance vs sqrt(3)/2");
        sn_built.emplace_back(e, lambda);
    });

    criterion(2, "single-layer table rows with d <= 448", 300.0, [&](Outcome& o) {
        // independent oracle: (d, r, n, alpha) rows with alpha = (rn - d) / (d (n - 1)) worked by hand
        const std::vector<SnRow> expected{{5, 2, 5, Rational(1, 4)},     {14, 5, 7, Rational(1, 4)},
                                          {16, 6, 6, Rational(1, 4)},    {42, 14, 9, Rational(1, 4)},
                                          {90, 20, 8, Rational(1, 9)},   {132, 42, 11, Rational(1, 4)},
                                          {168, 56, 9, Rational(1, 4)},  {210, 42, 10, Rational(1, 9)},
                                          {429, 132, 13, Rational(1, 4)}, {448, 70, 10, Rational(1, 16)}};
        auto rows = sn_table(448);
        o.require(rows.size() == expected.size(), "row count " + std::to_string(rows.size()));
        for (const auto& want : expected) {
            bool found = false;
            for (const auto& row : rows) {
                if (row.params.d != want.d || row.params.r != want.r || row.params.n != want.n) continue;
                found = true;
                o.require(row.params.alpha == want.alpha, "exact alpha for d=" + std::to_string(want.d));
                o.require(dimension(row.lambda) == want.d && dimension(row.mu) == want.r, "dimensions of shapes");
                auto e = single_layer_ensemble(row.lambda, row.mu);
                o.require(is_eitff_with(certify(e), to_double(want.alpha), 1e-9), "certify d=" + std::to_string(want.d));
                sn_built.emplace_back(std::move(e), row.lambda);
            }
            o.require(found, "missing row d=" + std::to_string(want.d));
        }
        o.note << rows.size() << " rows; ";
    });

    criterion(3, "alternating table rows with d <= 462", 600.0, [&](Outcome& o) {
        const std::vector<AnRow> expected{{Field::Real, 8, 3, 6, Rational(1, 4)},
                                          {Field::Complex, 35, 10, 8, Rational(9, 49)},
                                          {Field::Real, 126, 35, 10, Rational(16, 81)},
                                          {Field::Complex, 462, 126, 12, Rational(25, 121)}};
        auto rows = an_table(462);
        o.require(rows.size() == expected.size(), "row count");
        for (size_t i = 0; i < rows.size() && i < expected.size(); ++i) {
            const auto& p = rows[i].params;
            const auto& want = expected[i];
            o.require(p.field == want.field && p.d == want.d && p.r == want.r && p.n == want.n && p.alpha == want.alpha,
                      "exact parameters for d=" + std::to_string(want.d));
            auto sel = canonical_selection(p.mu, rows[i].delta);
            auto e = alternating_ensemble(sel, 1);
            o.require(e.field == want.field && e.d == want.d, "constructed field and d=" + std::to_string(want.d));
            o.require(is_eitff_with(certify(e), to_double(want.alpha), 1e-9), "certify d=" + std::to_string(want.d));
            an_built.emplace_back(std::move(e), sel);
        }
    });

    criterion(4, "exact certificates for (7,7,4,3,3) and (5,3,2,1,1)", 2.0, [&](Outcome& o) {
        auto check = [&](const IsoclinicCertificate& c, const std::string& name) {
            o.require(c.holds && c.sign_pattern, name + " holds");
            o.require(c.beta * c.beta == c.beta_squared, name + " beta^2 closed form");
            o.require(c.alpha == c.n * c.n * c.r * c.r * c.beta_squared / Rational(c.d * c.d), name + " alpha from beta");
            o.require(c.alpha == Rational(c.r * c.n - c.d, c.d * (c.n - 1)), name + " alpha from parameters");
        };
        for (int delta : {0, 1}) {
            auto start = std::chrono::steady_clock::now();
            auto big = isoclinic_certificate(Partition({7, 7, 4, 3, 3}), delta);
            o.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0, "1 s cap");
            check(big, "(7,7,4,3,3)");
            o.require(big.n == 25 && big.r == BigInt("11660320672"), "(7,7,4,3,3) n and r");
        }
        auto a = isoclinic_certificate(Partition({5, 3, 2, 1, 1}), 0);
        auto b = isoclinic_certificate(Partition({5, 3, 2, 1, 1}), 1);
        check(a, "(5,3,2,1,1) delta 0");
        check(b, "(5,3,2,1,1) delta 1");
        o.require(a.d == 42900 && a.r == 7700 && a.n == 13, "(42900,7700,13)");
        o.require(b.d == 57200 && b.r == 7700, "complement parameters");
    });

    criterion(5, "every proper layer subset for n <= 8 against both predictions", 60.0, [&](Outcome& o) {
        int tested = 0, successes = 0;
        for (int m = 1; m <= 7; ++m)
            for (const auto& mu : partitions_of(m)) {
                auto all = up_set(mu);
                auto canon = canonical_subsets(mu);
                auto c0 = isoclinic_certificate(mu, 0);
                const unsigned full = (1u << all.size()) - 1;
                for (unsigned mask = 1; mask < full; ++mask) {
                    std::vector<Partition> layers;
                    for (size_t i = 0; i < all.size(); ++i)
                        if (mask & (1u << i)) layers.push_back(all[i]);
                    BigInt dl = 0;
                    for (const auto& l : layers) dl += dimension(l);
                    if (dl == dimension(mu)) continue;
                    auto sel = make_selection(mu, layers);
                    bool numeric = certify(multi_layer_ensemble(sel)).classification == Classification::EITFF;
                    bool canonical = sel.layers == canon.even || sel.layers == canon.odd;
                    bool predicted = canonical && c0.holds;
                    ++tested;
                    successes += numeric;
                    o.require(numeric == predicted, "mu=" + mu.to_string() + " mask " + std::to_string(mask));
                    o.require(numeric == selection_certificate(sel).holds, "exact sums for mu=" + mu.to_string());
                }
                o.require(c0.holds == isoclinic_certificate(mu, 1).holds, "delta symmetry for mu=" + mu.to_string());
            }
        o.note << tested << " subsets, " << successes << " equi-isoclinic; ";
    });

    criterion(6, "representation suites: S_n for n <= 7, A_6 on (3,2,1)", 120.0, [&](Outcome& o) {
        std::mt19937 rng(2024);
        int shapes = 0, products = 0;
        for (int n = 2; n <= 7; ++n)
            for (const auto& lambda : partitions_of(n)) {
                ++shapes;
                std::vector<RealMatrix> s(n);
                for (int k = 1; k < n; ++k) s[k] = adjacent_transposition_matrix(lambda, k);
                const RealMatrix id = RealMatrix::Identity(s[1].rows(), s[1].rows());
                for (int k = 1; k < n; ++k) {
                    o.require(max_abs(s[k] * s[k] - id) <= 1e-9, "involution");
                    if (k + 1 < n) o.require(max_abs(s[k] * s[k + 1] * s[k] - s[k + 1] * s[k] * s[k + 1]) <= 1e-9, "braid");
                    for (int j = k + 2; j < n; ++j) o.require(max_abs(s[k] * s[j] - s[j] * s[k]) <= 1e-9, "far commute");
                }
                for (int trial = 0; trial < 100; ++trial) {
                    auto g = random_permutation(n, rng), h = random_permutation(n, rng);
                    auto pg = rep_matrix(lambda, g);
                    o.require(max_abs(rep_matrix(lambda, g * h) - pg * rep_matrix(lambda, h)) <= 1e-9, "homomorphism");
                    o.require(isometry_defect(pg) <= 1e-9, "orthogonality");
                    ++products;
                }
                if (n >= 3)
                    for (const auto& mu : down_set(lambda)) {
                        auto psi = branching_isometry(lambda, mu);
                        for (int k = 1; k + 1 < n; ++k)
                            o.require(max_abs(s[k] * psi - psi * adjacent_transposition_matrix(mu, k)) <= 1e-9,
                                      "branching intertwining");
                    }
            }
        Partition nu({3, 2, 1});
        auto u = associator_unitary(nu);
        o.require(max_abs(u * u - ComplexMatrix::Identity(u.rows(), u.cols())) <= 1e-9, "U^2 = I");
        auto ref = reference_tableau(nu);
        const int q = quarter_turns(nu);
        for (const auto& t : enumerate_tableaux(nu))
            o.require(reference_sign(t, ref) * reference_sign(transpose_tableau(t), ref) == (q % 2 == 0 ? 1 : -1),
                      "signs of transposes");
        for (int trial = 0; trial < 100; ++trial) {
            auto g = random_permutation(6, rng), h = random_permutation(6, rng);
            ComplexMatrix pg = rep_matrix(nu, g).cast<cd>();
            o.require(max_abs(u * pg * u.adjoint() - double(g.sign()) * pg) <= 1e-9, "associator conjugacy");
            if (g.sign() != 1) g = Permutation::adjacent(6, 1) * g;
            if (h.sign() != 1) h = Permutation::adjacent(6, 1) * h;
            for (int eps : {1, -1})
                o.require(max_abs(an_rep_matrix(nu, eps, g * h) - an_rep_matrix(nu, eps, g) * an_rep_matrix(nu, eps, h)) <=
                              1e-9,
                          "rho homomorphism");
        }
        o.note << shapes << " shapes, " << products << " random products; ";
    });

    criterion(7, "S_6 ensemble over (3,1,1) splits into the two (8,3,6) pieces", 10.0, [&](Outcome& o) {
        Partition mu({3, 1, 1});
        auto sel = canonical_selection(mu, 0);
        o.require(sel.layers.size() == 1 && sel.layers[0] == Partition({3, 2, 1}), "single layer (3,2,1)");
        auto res = decomposition_check(sel);
        o.require(res.holds && res.residual <= 1e-9, "block-diagonal decomposition");
        for (int eps : {1, -1}) {
            auto piece = alternating_ensemble(sel, eps);
            o.require(piece.d == 8 && piece.r == 3 && piece.n == 6 && piece.field == Field::Real, "piece parameters");
            o.require(is_eitff_with(certify(piece), 0.25, 1e-9), "piece certifies");
        }
        o.note << "residual " << res.residual << "; ";
    });

    criterion(8, "Naimark round trip (16,6,6) -> (20,6,6) -> (16,6,6)", 60.0, [&](Outcome& o) {
        auto e = single_layer_ensemble(Partition({3, 2, 1}), Partition({3, 1, 1}));
        auto c = naimark_complement(e);
        o.require(c.d == 20 && c.r == 6 && c.n == 6, "complement parameters");
        o.require(certify(c).classification == Classification::EITFF, "complement certifies");
        auto back = naimark_complement(c);
        double gap = max_abs(fusion_gram(back) - fusion_gram(e));
        o.require(gap <= 1e-7, "double complement Gram");
        o.note << "Gram gap " << gap << "; ";
    });

    criterion(9, "automorphism witnesses for every generator", 300.0, [&](Outcome& o) {
        o.require(!sn_built.empty() && an_built.size() == 4, "ensembles from criteria 1-3");
        for (const auto& [e, lambda] : sn_built) o.require(sn_witnesses(e, lambda), "S_n witness d=" + std::to_string(e.d));
        for (const auto& [e, sel] : an_built)
            for (int k = 2; k < e.n; ++k) {
                auto g = Permutation::adjacent(e.n, 1) * Permutation::adjacent(e.n, k);
                o.require(automorphism_witness(e, alternating_rep_matrix(sel, 1, g), g),
                          "A_n witness d=" + std::to_string(e.d));
            }
        o.note << sn_built.size() + an_built.size() << " ensembles; ";
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
