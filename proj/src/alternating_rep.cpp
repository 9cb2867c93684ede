#include "eitff/alternating_rep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "eitff/error.hpp"

namespace eitff {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_small_symmetric(const Partition& mu) {
    require_symmetric(mu);
    if (mu.distinct_parts() % 2 != 0)
        fail(ErrorKind::OddDistinctParts, mu.to_string() + " has an odd number of distinct parts");
}

void require_alternating_size(const Partition& nu) {
    if (nu.size() < 5) fail(ErrorKind::TooSmall, "rho matrices need n >= 5, got " + nu.to_string());
}

} // namespace

void require_symmetric(const Partition& nu) {
    if (!nu.is_symmetric()) fail(ErrorKind::NotSymmetric, nu.to_string() + " is not symmetric");
}

void require_sign(int eps) {
    if (eps != 1 && eps != -1) fail(ErrorKind::ConstraintViolation, "epsilon must be +1 or -1");
}

int diagonal_count(const Partition& nu) { return nu.diagonal_length(); }

int quarter_turns(const Partition& nu) {
    require_symmetric(nu);
    return (nu.size() - diagonal_count(nu)) / 2;
}

cd i_power(int q) {
    switch (((q % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

Field field_for(const Partition& nu) { return quarter_turns(nu) % 2 == 0 ? Field::Real : Field::Complex; }

bool is_big(const Partition& nu) {
    require_symmetric(nu);
    return nu.distinct_parts() % 2 == 1;
}

StandardTableau reference_tableau(const Partition& nu) {
    if (!is_big(nu) || nu.size() == 1) return row_superstandard(nu);
    int p = diagonal_count(nu);
    Partition small = remove_box(nu, {p, p});
    return embed(row_superstandard(small), nu);
}

StandardTableau pair_reference_tableau(const Partition& lambda, const Partition& mu) {
    require_small_symmetric(mu);
    return embed(row_superstandard(mu), lambda);
}

int reference_sign(const StandardTableau& T, const StandardTableau& reference) {
    return relabelling(T, reference).sign();
}

ComplexMatrix associator_unitary(const Partition& nu) {
    require_symmetric(nu);
    auto rep = young_rep(nu);
    auto ref = reference_tableau(nu);
    cd phase = i_power(quarter_turns(nu));
    ComplexMatrix u = ComplexMatrix::Zero(rep->dim(), rep->dim());
    for (int t = 0; t < rep->dim(); ++t) {
        const auto& T = rep->tableau(t);
        u(rep->index_of(transpose_tableau(T)), t) = phase * double(reference_sign(T, ref));
    }
    return u;
}

std::vector<int> tab_star_indices(const Partition& nu) {
    require_symmetric(nu);
    if (nu.size() < 2) fail(ErrorKind::DegenerateShape, "Tab_* needs a box at (1, 2)");
    auto rep = young_rep(nu);
    std::vector<int> out;
    for (int t = 0; t < rep->dim(); ++t)
        if (rep->tableau(t).at({1, 2}) == 2) out.push_back(t);
    return out;
}

ComplexMatrix eigenspace_injection(const Partition& nu, int eps) {
    require_sign(eps);
    auto star = tab_star_indices(nu);
    auto rep = young_rep(nu);
    auto ref = reference_tableau(nu);
    cd phase = i_power(quarter_turns(nu));
    ComplexMatrix j = ComplexMatrix::Zero(rep->dim(), static_cast<int>(star.size()));
    for (std::size_t c = 0; c < star.size(); ++c) {
        const auto& T = rep->tableau(star[c]);
        j(star[c], c) = kInvSqrt2;
        j(rep->index_of(transpose_tableau(T)), c) = double(eps) * phase * double(reference_sign(T, ref)) * kInvSqrt2;
    }
    return j;
}

AlternatingRep::AlternatingRep(const Partition& nu, int eps)
    : shape_(nu), eps_(eps), rep_(young_rep(nu)), reference_(reference_tableau(nu)),
      phase_(i_power(quarter_turns(nu))) {
    require_sign(eps);
    require_alternating_size(nu);
    star_ = tab_star_indices(nu);
    star_pos_.assign(rep_->dim(), -1);
    for (std::size_t c = 0; c < star_.size(); ++c) star_pos_[star_[c]] = static_cast<int>(c);

    int n = nu.size();
    int d = dim();
    gens_.resize(n);
    for (int k = 2; k < n; ++k) {
        std::vector<Eigen::Triplet<cd>> entries;
        for (int c = 0; c < d; ++c) {
            int t = star_[c];
            entries.emplace_back(c, c, rep_->diagonal(k, t));
            int p = rep_->partner(k, t);
            if (p < 0) continue;
            if (k >= 3) {
                entries.emplace_back(star_pos_[p], c, rep_->off_diagonal(k, t));
            } else {
                // s_2 T leaves Tab_*; its transpose s_2 T' is back inside.
                const auto& T = rep_->tableau(t);
                int target = star_index(transpose_tableau(rep_->tableau(p)));
                entries.emplace_back(target, c, double(eps_) * associator_coefficient(T) * rep_->off_diagonal(k, t));
            }
        }
        gens_[k].resize(d, d);
        gens_[k].setFromTriplets(entries.begin(), entries.end());
    }
}

int AlternatingRep::star_index(const StandardTableau& T) const { return star_pos_[rep_->index_of(T)]; }

cd AlternatingRep::associator_coefficient(const StandardTableau& T) const {
    return phase_ * double(reference_sign(T, reference_));
}

void AlternatingRep::apply(const Permutation& g, ComplexMatrix& x) const {
    if (g.degree() != shape_.size()) fail(ErrorKind::SizeMismatch, "permutation degree mismatch");
    if (g.sign() != 1) fail(ErrorKind::OddPermutation, "rho is defined on even permutations only");
    if (x.rows() != dim()) fail(ErrorKind::SizeMismatch, "row count does not match representation");
    auto w = g.adjacent_word();
    // g = (s_a s_b)(s_c s_e)..., each factor (s_1 s_a)^{-1} (s_1 s_b).
    for (std::size_t i = w.size(); i >= 2; i -= 2) {
        int a = w[i - 2], b = w[i - 1];
        if (b != 1) x = gens_[b] * x;
        if (a != 1) x = gens_[a].adjoint() * x;
    }
}

std::shared_ptr<const AlternatingRep> alternating_rep(const Partition& nu, int eps) {
    static std::shared_mutex mutex;
    static std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const AlternatingRep>> cache;
    auto key = std::make_pair(nu.parts(), eps);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rep = std::make_shared<const AlternatingRep>(nu, eps);
    std::unique_lock lock(mutex);
    return cache.emplace(key, rep).first->second;
}

ComplexMatrix an_generator_matrix(const Partition& nu, int eps, int k) {
    require_symmetric(nu);
    require_alternating_size(nu);
    if (k < 2 || k >= nu.size()) fail(ErrorKind::IndexOutOfRange, "generator index must be in [2, n-1]");
    return ComplexMatrix(alternating_rep(nu, eps)->generator(k));
}

ComplexMatrix an_rep_matrix(const Partition& nu, int eps, const Permutation& g) {
    require_symmetric(nu);
    auto rep = alternating_rep(nu, eps);
    ComplexMatrix m = ComplexMatrix::Identity(rep->dim(), rep->dim());
    rep->apply(g, m);
    return m;
}

cd pair_associator_coefficient(const StandardTableau& T, const Partition& mu) {
    auto ref = pair_reference_tableau(T.shape(), mu);
    return i_power(quarter_turns(mu)) * double(reference_sign(T, ref));
}

ComplexMatrix pair_associator_unitary(const Partition& mu) {
    require_small_symmetric(mu);
    auto shapes = up_set(mu);
    std::vector<int> offset;
    int total = 0;
    for (const auto& l : shapes) {
        offset.push_back(total);
        total += young_rep(l)->dim();
    }
    ComplexMatrix u = ComplexMatrix::Zero(total, total);
    for (std::size_t b = 0; b < shapes.size(); ++b) {
        auto rep = young_rep(shapes[b]);
        Partition lt = transpose(shapes[b]);
        std::size_t bt = std::find(shapes.begin(), shapes.end(), lt) - shapes.begin();
        auto rep_t = young_rep(lt);
        for (int t = 0; t < rep->dim(); ++t) {
            const auto& T = rep->tableau(t);
            u(offset[bt] + rep_t->index_of(transpose_tableau(T)), offset[b] + t) = pair_associator_coefficient(T, mu);
        }
    }
    return u;
}

namespace {

void require_pair(const Partition& lambda, const Partition& mu) {
    require_small_symmetric(mu);
    if (lambda.is_symmetric()) fail(ErrorKind::SymmetricLambda, lambda.to_string() + " is symmetric");
    try {
        added_box(lambda, mu);
    } catch (const Error&) {
        fail(ErrorKind::NotInDownSet, mu.to_string() + " is not below " + lambda.to_string());
    }
}

} // namespace

ComplexMatrix pair_injection(const Partition& lambda, const Partition& mu, int eps) {
    require_sign(eps);
    require_pair(lambda, mu);
    auto rep = young_rep(lambda);
    auto rep_t = young_rep(transpose(lambda));
    int d = rep->dim();
    ComplexMatrix j = ComplexMatrix::Zero(2 * d, d);
    for (int t = 0; t < d; ++t) {
        const auto& T = rep->tableau(t);
        j(t, t) = kInvSqrt2;
        j(d + rep_t->index_of(transpose_tableau(T)), t) = double(eps) * pair_associator_coefficient(T, mu) * kInvSqrt2;
    }
    return j;
}

ComplexMatrix pair_branching_isometry(const Partition& lambda, const Partition& mu, int eps) {
    require_sign(eps);
    require_pair(lambda, mu);
    auto rep = young_rep(lambda);
    auto small = young_rep(mu);
    auto star = tab_star_indices(mu);
    Partition lt = transpose(lambda);
    ComplexMatrix psi = ComplexMatrix::Zero(rep->dim(), static_cast<int>(star.size()));
    for (std::size_t c = 0; c < star.size(); ++c) {
        const auto& R = small->tableau(star[c]);
        psi(rep->index_of(embed(R, lambda)), c) += kInvSqrt2;
        // w_S = eps c_S w_{S'} moves the lambda' half into the lambda basis.
        StandardTableau S = embed(R, lt);
        psi(rep->index_of(transpose_tableau(S)), c) += double(eps) * pair_associator_coefficient(S, mu) * kInvSqrt2;
    }
    return psi;
}

ComplexMatrix symmetric_branching_isometry(const Partition& nu, const Partition& mu, int eps) {
    require_sign(eps);
    require_symmetric(nu);
    require_symmetric(mu);
    if (!is_big(nu)) fail(ErrorKind::NotSymmetric, nu.to_string() + " has an even number of distinct parts");
    try {
        added_box(nu, mu);
    } catch (const Error&) {
        fail(ErrorKind::NotInDownSet, mu.to_string() + " is not below " + nu.to_string());
    }
    auto big = young_rep(nu);
    auto small = young_rep(mu);
    auto big_star = tab_star_indices(nu);
    auto small_star = tab_star_indices(mu);
    std::vector<int> pos(big->dim(), -1);
    for (std::size_t c = 0; c < big_star.size(); ++c) pos[big_star[c]] = static_cast<int>(c);
    ComplexMatrix psi = ComplexMatrix::Zero(static_cast<int>(big_star.size()), static_cast<int>(small_star.size()));
    for (std::size_t c = 0; c < small_star.size(); ++c)
        psi(pos[big->index_of(embed(small->tableau(small_star[c]), nu))], c) = 1.0;
    return psi;
}

} // namespace eitff
