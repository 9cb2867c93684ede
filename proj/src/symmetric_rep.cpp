#include "eitff/symmetric_rep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "eitff/error.hpp"

namespace eitff {

namespace {

std::string tableau_key(const StandardTableau& T) {
    std::string key;
    for (int r : T.row_word()) key += static_cast<char>(r);
    return key;
}

} // namespace

YoungRep::YoungRep(const Partition& lambda) : shape_(lambda) {
    if (dimension(lambda) > kMaxRepresentationDim)
        fail(ErrorKind::ResourceLimit, "representation " + lambda.to_string() + " is too large");
    tableaux_ = enumerate_tableaux(lambda);
    int d = dim();
    index_.reserve(d);
    for (int t = 0; t < d; ++t) index_.emplace(tableau_key(tableaux_[t]), t);

    int n = degree();
    gens_.resize(n);
    for (int k = 1; k < n; ++k) {
        Generator& g = gens_[k];
        g.diag.resize(d);
        g.partner.assign(d, -1);
        g.off.assign(d, 0.0);
        for (int t = 0; t < d; ++t) {
            const auto& T = tableaux_[t];
            int D = axial_distance(T, k + 1, k);
            g.diag[t] = 1.0 / D;
            if (std::abs(D) >= 2) {
                g.partner[t] = index_of(apply_adjacent_transposition(T, k).tableau);
                g.off[t] = std::sqrt(1.0 - 1.0 / (double(D) * D));
            }
        }
    }
}

int YoungRep::index_of(const StandardTableau& T) const {
    if (!(T.shape() == shape_)) fail(ErrorKind::InvalidTableau, "tableau has shape " + T.shape().to_string());
    auto it = index_.find(tableau_key(T));
    if (it == index_.end() || !(tableaux_[it->second] == T))
        fail(ErrorKind::InvalidTableau, "not a standard tableau: " + T.to_string());
    return it->second;
}

template <typename M>
void YoungRep::apply_generator_impl(int k, M& x) const {
    if (k < 1 || k >= degree()) fail(ErrorKind::IndexOutOfRange, "generator index out of range");
    if (x.rows() != dim()) fail(ErrorKind::SizeMismatch, "row count does not match representation");
    const Generator& g = gens_[k];
    for (int t = 0; t < dim(); ++t) {
        int p = g.partner[t];
        if (p < 0) {
            x.row(t) *= g.diag[t];
        } else if (t < p) {
            auto xt = x.row(t).eval();
            auto xp = x.row(p).eval();
            x.row(t) = g.diag[t] * xt + g.off[t] * xp;
            x.row(p) = g.off[t] * xt + g.diag[p] * xp;
        }
    }
}

void YoungRep::apply_generator(int k, RealMatrix& x) const { apply_generator_impl(k, x); }
void YoungRep::apply_generator(int k, ComplexMatrix& x) const { apply_generator_impl(k, x); }

void YoungRep::apply(const Permutation& g, RealMatrix& x) const {
    if (g.degree() != degree()) fail(ErrorKind::SizeMismatch, "permutation degree mismatch");
    auto w = g.adjacent_word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_generator(*it, x);
}

void YoungRep::apply(const Permutation& g, ComplexMatrix& x) const {
    if (g.degree() != degree()) fail(ErrorKind::SizeMismatch, "permutation degree mismatch");
    auto w = g.adjacent_word();
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply_generator(*it, x);
}

std::shared_ptr<const YoungRep> young_rep(const Partition& lambda) {
    static std::shared_mutex mutex;
    static std::map<std::vector<int>, std::shared_ptr<const YoungRep>> cache;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(lambda.parts());
        if (it != cache.end()) return it->second;
    }
    auto rep = std::make_shared<const YoungRep>(lambda);
    std::unique_lock lock(mutex);
    return cache.emplace(lambda.parts(), rep).first->second;
}

RealMatrix adjacent_transposition_matrix(const Partition& lambda, int k) {
    auto rep = young_rep(lambda);
    RealMatrix m = RealMatrix::Identity(rep->dim(), rep->dim());
    rep->apply_generator(k, m);
    return m;
}

RealMatrix rep_matrix(const Partition& lambda, const Permutation& g) {
    auto rep = young_rep(lambda);
    RealMatrix m = RealMatrix::Identity(rep->dim(), rep->dim());
    rep->apply(g, m);
    return m;
}

RealMatrix branching_isometry(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size() + 1 || !(lambda.size() > 1))
        fail(ErrorKind::NotInDownSet, mu.to_string() + " is not below " + lambda.to_string());
    try {
        added_box(lambda, mu);
    } catch (const Error&) {
        fail(ErrorKind::NotInDownSet, mu.to_string() + " is not below " + lambda.to_string());
    }
    auto big = young_rep(lambda);
    auto small = young_rep(mu);
    RealMatrix psi = RealMatrix::Zero(big->dim(), small->dim());
    for (int r = 0; r < small->dim(); ++r) psi(big->index_of(embed(small->tableau(r), lambda)), r) = 1.0;
    return psi;
}

std::vector<Permutation> default_transversal(int n) {
    std::vector<Permutation> t;
    for (int k = 1; k < n; ++k) t.push_back(Permutation::transposition(n, k, n));
    t.push_back(Permutation(n));
    return t;
}

std::vector<Permutation> even_transversal(int n) {
    if (n < 4) fail(ErrorKind::TooSmall, "even transversal needs n >= 4");
    std::vector<Permutation> t;
    auto last = Permutation::transposition(n, n - 1, n);
    for (int k = 1; k <= n - 2; ++k) t.push_back(last * Permutation::transposition(n, k, n));
    t.push_back(Permutation::transposition(n, n - 2, n) * last);
    t.push_back(Permutation(n));
    return t;
}

void validate_transversal(const std::vector<Permutation>& t, int n, bool even) {
    if (static_cast<int>(t.size()) != n)
        fail(ErrorKind::SizeMismatch, "transversal needs exactly " + std::to_string(n) + " elements");
    for (int k = 1; k <= n; ++k) {
        const auto& g = t[k - 1];
        if (g.degree() != n) fail(ErrorKind::SizeMismatch, "transversal element has the wrong degree");
        if (g(n) != k)
            fail(ErrorKind::InvalidPermutation, "transversal element " + std::to_string(k) + " must send n to " + std::to_string(k));
        if (even && g.sign() != 1) fail(ErrorKind::OddPermutation, "transversal element is odd");
    }
}

} // namespace eitff
