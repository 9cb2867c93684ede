#include "eitff/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eitff/alternating_rep.hpp"
#include "eitff/error.hpp"
#include "eitff/symmetric_rep.hpp"

namespace eitff {

namespace {

std::vector<Permutation> resolve_transversal(const std::optional<std::vector<Permutation>>& t, int n, bool even) {
    if (!t) return even ? even_transversal(n) : default_transversal(n);
    validate_transversal(*t, n, even);
    return *t;
}

void check_cap(const BigInt& d, const ConstructionOptions& options) {
    if (d > options.max_dim)
        fail(ErrorKind::ResourceLimit, "ambient dimension " + d.str() + " exceeds the cap " + std::to_string(options.max_dim));
}

double sqrt_ratio(const BigInt& num, const BigInt& den) {
    return std::sqrt(to_double(Rational(num, den)));
}

nlohmann::json transversal_json(const std::vector<Permutation>& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : t) out.push_back(g.to_cycle_string());
    return out;
}

nlohmann::json layers_json(const std::vector<Partition>& layers) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& l : layers) out.push_back(l.to_string());
    return out;
}

BigInt layer_dimension(const std::vector<Partition>& layers) {
    BigInt d = 0;
    for (const auto& l : layers) d += dimension(l);
    return d;
}

Rational alpha_of(const BigInt& d, const BigInt& r, const BigInt& n) {
    return Rational(r * n - d, d * (n - 1));
}

} // namespace

LayerSelection make_selection(const Partition& mu, const std::vector<Partition>& layers) {
    if (layers.empty()) fail(ErrorKind::EmptySelection, "layer selection is empty");
    auto up = up_set(mu);
    std::vector<Partition> sorted;
    for (const auto& l : up)
        if (std::count(layers.begin(), layers.end(), l) > 0) sorted.push_back(l);
    for (const auto& l : layers)
        if (std::find(up.begin(), up.end(), l) == up.end())
            fail(ErrorKind::NotInUpSet, l.to_string() + " is not in the up-set of " + mu.to_string());
    if (sorted.size() != layers.size()) fail(ErrorKind::InvalidLayerSelection, "layer selection repeats a shape");
    return {mu, sorted};
}

CanonicalSubsets canonical_subsets(const Partition& mu) {
    CanonicalSubsets out;
    auto up = up_set(mu);
    for (std::size_t p = 1; p <= up.size(); ++p) (p % 2 == 0 ? out.even : out.odd).push_back(up[p - 1]);
    return out;
}

LayerSelection canonical_selection(const Partition& mu, int delta) {
    if (delta != 0 && delta != 1) fail(ErrorKind::ConstraintViolation, "delta must be 0 or 1");
    auto cs = canonical_subsets(mu);
    return {mu, delta == 0 ? cs.even : cs.odd};
}

FusionEnsemble single_layer_ensemble(const Partition& lambda, const Partition& mu,
                                     const std::optional<std::vector<Permutation>>& transversal,
                                     const ConstructionOptions& options) {
    BigInt d = dimension(lambda);
    check_cap(d, options);
    RealMatrix psi = branching_isometry(lambda, mu);
    if (psi.rows() == psi.cols()) fail(ErrorKind::TrivialSubspace, "the branched subspace is all of V_lambda");
    int n = lambda.size();
    auto t = resolve_transversal(transversal, n, false);
    auto rep = young_rep(lambda);
    std::vector<ComplexMatrix> blocks;
    for (const auto& g : t) {
        RealMatrix x = psi;
        rep->apply(g, x);
        blocks.push_back(x.cast<cd>());
    }
    nlohmann::json meta = {{"construction", "single-layer"},
                           {"lambda", lambda.to_string()},
                           {"mu", mu.to_string()},
                           {"transversal", transversal_json(t)}};
    return make_ensemble(Field::Real, std::move(blocks), meta);
}

FusionEnsemble multi_layer_ensemble(const LayerSelection& sel_in,
                                    const std::optional<std::vector<Permutation>>& transversal,
                                    const ConstructionOptions& options) {
    LayerSelection sel = make_selection(sel_in.mu, sel_in.layers);
    BigInt dl = layer_dimension(sel.layers);
    check_cap(dl, options);
    BigInt dmu = dimension(sel.mu);
    if (dl == dmu) fail(ErrorKind::TrivialSubspace, "the branched subspace is all of V_L");
    int n = sel.mu.size() + 1;
    auto t = resolve_transversal(transversal, n, false);

    int total = static_cast<int>(dl);
    RealMatrix psi = RealMatrix::Zero(total, static_cast<int>(dmu));
    std::vector<int> offset;
    int row = 0;
    for (const auto& l : sel.layers) {
        offset.push_back(row);
        RealMatrix b = branching_isometry(l, sel.mu);
        psi.middleRows(row, b.rows()) = sqrt_ratio(dimension(l), dl) * b;
        row += static_cast<int>(b.rows());
    }
    std::vector<ComplexMatrix> blocks;
    for (const auto& g : t) {
        RealMatrix x = psi;
        for (std::size_t i = 0; i < sel.layers.size(); ++i) {
            auto rep = young_rep(sel.layers[i]);
            RealMatrix part = x.middleRows(offset[i], rep->dim());
            rep->apply(g, part);
            x.middleRows(offset[i], rep->dim()) = part;
        }
        blocks.push_back(x.cast<cd>());
    }
    nlohmann::json meta = {{"construction", "multi-layer"},
                           {"mu", sel.mu.to_string()},
                           {"layers", layers_json(sel.layers)},
                           {"transversal", transversal_json(t)}};
    for (int delta : {0, 1})
        if (canonical_selection(sel.mu, delta).layers == sel.layers) meta["delta"] = delta;
    return make_ensemble(Field::Real, std::move(blocks), meta);
}

ComplexMatrix layer_rep_matrix(const std::vector<Partition>& layers, const Permutation& g) {
    int total = 0;
    for (const auto& l : layers) total += young_rep(l)->dim();
    ComplexMatrix u = ComplexMatrix::Zero(total, total);
    int off = 0;
    for (const auto& l : layers) {
        RealMatrix m = rep_matrix(l, g);
        u.block(off, off, m.rows(), m.cols()) = m.cast<cd>();
        off += static_cast<int>(m.rows());
    }
    return u;
}

const char* to_string(SingleLayerFamily f) {
    switch (f) {
    case SingleLayerFamily::TypeI: return "TypeI";
    case SingleLayerFamily::TypeII: return "TypeII";
    case SingleLayerFamily::TypeIII: return "TypeIII";
    case SingleLayerFamily::EquichordalOnly: return "EquichordalOnly";
    }
    return "EquichordalOnly";
}

SingleLayerClass classify_single_layer(const Partition& lambda, const Partition& mu) {
    BoxIndex box;
    try {
        box = added_box(lambda, mu);
    } catch (const Error&) {
        fail(ErrorKind::NotInDownSet, mu.to_string() + " is not below " + lambda.to_string());
    }
    if (down_set(lambda).size() == 1) fail(ErrorKind::TrivialSubspace, "lambda is a rectangle");
    std::vector<int> parts = mu.parts();
    std::vector<int> distinct = parts;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    SingleLayerClass out;
    if (distinct.size() == 1) {
        int rows = mu.length(), width = parts[0];
        if (box.row == 1 && rows >= 2) return {SingleLayerFamily::TypeI, rows, width, 0};
        if (box.col == 1 && width >= 2) return {SingleLayerFamily::TypeII, width, rows, 0};
    } else if (distinct.size() == 2) {
        int a = static_cast<int>(std::count(parts.begin(), parts.end(), distinct[0]));
        int c = static_cast<int>(std::count(parts.begin(), parts.end(), distinct[1]));
        int b = distinct[1];
        if (distinct[0] - b == c && c >= 2 && box.row == a + 1) return {SingleLayerFamily::TypeIII, a, b, c};
    }
    return out;
}

std::pair<Partition, Partition> single_layer_shapes(SingleLayerFamily family, int a, int b, int c) {
    switch (family) {
    case SingleLayerFamily::TypeI: {
        if (a < 2 || b < 1) fail(ErrorKind::ConstraintViolation, "type I needs a >= 2, b >= 1");
        std::vector<int> mu(a, b), lambda(a, b);
        lambda[0] = b + 1;
        return {Partition(mu), Partition(lambda)};
    }
    case SingleLayerFamily::TypeII: {
        if (a < 2 || b < 1) fail(ErrorKind::ConstraintViolation, "type II needs a >= 2, b >= 1");
        std::vector<int> mu(b, a), lambda(b, a);
        lambda.push_back(1);
        return {Partition(mu), Partition(lambda)};
    }
    case SingleLayerFamily::TypeIII: {
        if (a < 1 || b < 1 || c < 2) fail(ErrorKind::ConstraintViolation, "type III needs a, b >= 1, c >= 2");
        std::vector<int> mu(a, b + c);
        mu.insert(mu.end(), c, b);
        std::vector<int> lambda = mu;
        lambda[a] = b + 1;
        return {Partition(mu), Partition(lambda)};
    }
    case SingleLayerFamily::EquichordalOnly: break;
    }
    fail(ErrorKind::ConstraintViolation, "no parameter formula for equichordal-only layers");
}

ExactParameters single_layer_parameters(SingleLayerFamily family, int a, int b, int c) {
    auto [mu, lambda] = single_layer_shapes(family, a, b, c);
    ExactParameters p;
    p.r = dimension(mu);
    if (family == SingleLayerFamily::TypeIII) {
        p.n = BigInt(a) * b + BigInt(a) * c + BigInt(b) * c + 1;
        Rational d = Rational(BigInt(c) * c, BigInt(a + c) * (b + c)) * Rational(p.r * p.n);
        p.d = boost::multiprecision::numerator(d);
    } else {
        p.n = BigInt(a) * b + 1;
        Rational d = Rational(a, a + b) * Rational(p.r * p.n);
        p.d = boost::multiprecision::numerator(d);
    }
    p.alpha = alpha_of(p.d, p.r, p.n);
    return p;
}

IsoclinicCertificate isoclinic_certificate(const Partition& mu, int delta) {
    return selection_certificate(canonical_selection(mu, delta), delta);
}

IsoclinicCertificate selection_certificate(const LayerSelection& sel, int delta) {
    const Partition& mu = sel.mu;
    IsoclinicCertificate cert;
    cert.mu = mu;
    cert.delta = delta;
    cert.layers = make_selection(mu, sel.layers).layers;
    cert.removable = removable_boxes(mu);
    cert.n = mu.size() + 1;
    cert.r = dimension(mu);

    Rational share = 0; // d_L / (n d_mu)
    std::vector<std::pair<BoxIndex, Rational>> added;
    for (const auto& l : cert.layers) {
        Rational q = dimension_ratio(l, mu);
        added.emplace_back(added_box(l, mu), q);
        share += q;
    }
    for (const auto& box : cert.removable) {
        Rational s = 0;
        for (const auto& [a, q] : added) s += q / Rational(axial_distance(a, box));
        cert.s.push_back(s);
    }
    Rational d = share * Rational(cert.n * cert.r);
    if (boost::multiprecision::denominator(d) != 1) fail(ErrorKind::NumericalFailure, "non-integral layer dimension");
    cert.d = boost::multiprecision::numerator(d);

    cert.holds = true;
    cert.sign_pattern = true;
    Rational first = cert.s.front();
    cert.beta = delta == 1 ? first : Rational(-first);
    if (delta != 0 && delta != 1) {
        cert.beta = first;
        cert.sign_pattern = false;
    }
    for (std::size_t q = 1; q <= cert.s.size(); ++q) {
        const Rational& s = cert.s[q - 1];
        if (abs(s) != abs(first)) cert.holds = false;
        Rational expected = ((q + delta) % 2 == 0) ? cert.beta : Rational(-cert.beta);
        if (s != expected || (delta != 0 && delta != 1)) cert.sign_pattern = false;
    }
    if (cert.beta < 0) cert.sign_pattern = false;
    cert.beta = abs(cert.beta);

    Rational nr(cert.n * cert.r);
    cert.beta_squared = Rational(cert.d) * (nr - Rational(cert.d)) / (nr * nr * Rational(cert.n - 1));
    if (cert.d != 0) cert.alpha = nr * nr * cert.beta_squared / Rational(cert.d * cert.d);
    return cert;
}

std::vector<IsoclinicCertificate> search_isoclinic(int max_n) {
    std::vector<IsoclinicCertificate> out;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& mu : partitions_of(n - 1))
            for (int delta : {0, 1}) {
                auto cert = isoclinic_certificate(mu, delta);
                if (cert.holds) out.push_back(std::move(cert));
            }
    return out;
}

FamilyMember three_part_family(int a, int f, int h, int b) {
    auto bad = [](const std::string& why) { fail(ErrorKind::StepConstraintViolated, why); };
    if (a < 1 || f < 1) bad("a and f must be positive");
    if (h <= 2 || (2 * a * f) % h != 0) bad("h must exceed 2 and divide 2af");
    if (b <= 0 || 2 * b >= h || ((a + h) * f) % b != 0) bad("b must divide (a+h)f with 0 < b < h/2");
    int c = f + 2 * a * f / h;
    int e = (a - b + h) * f / b - c;
    int g = h - b;
    if (e < 1) bad("the construction gives e < 1");
    if (c != 2 * a * f / (b + g) + f || e != (a + g) * f / b - c) bad("inconsistent family parameters");
    std::vector<int> parts;
    parts.insert(parts.end(), a, e + f + g);
    parts.insert(parts.end(), b, e + f);
    parts.insert(parts.end(), c, e);
    Partition mu(parts);
    return {mu, {a, b, c, e, f, g}, isoclinic_certificate(mu, 0), isoclinic_certificate(mu, 1)};
}

FamilyMember four_part_family(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) fail(ErrorKind::DivisibilityViolated, "a, b, c must be positive");
    if ((b * b) % c != 0) fail(ErrorKind::DivisibilityViolated, "c must divide b^2");
    int e = b * b / c + b;
    std::vector<int> parts;
    parts.insert(parts.end(), a, a + b + c + e);
    parts.insert(parts.end(), b, a + b + c);
    parts.insert(parts.end(), c, a + b);
    parts.insert(parts.end(), e, a);
    Partition mu(parts);
    return {mu, {a, b, c, e}, isoclinic_certificate(mu, 0), isoclinic_certificate(mu, 1)};
}

namespace {

// One summand of V_L^eps: a symmetric shape through Tab_*, or a pair
// {lambda, lambda'} through Tab(lambda).
struct AltComponent {
    Partition shape;
    bool symmetric = false;
    std::shared_ptr<const AlternatingRep> arep;
    std::shared_ptr<const YoungRep> yrep;
    int offset = 0;
    int dim = 0;
    BigInt shape_dim;
};

void validate_alternating(const LayerSelection& sel) {
    require_symmetric(sel.mu);
    if (sel.mu.distinct_parts() % 2 != 0)
        fail(ErrorKind::OddDistinctParts, sel.mu.to_string() + " has an odd number of distinct parts");
    for (const auto& l : sel.layers)
        if (std::find(sel.layers.begin(), sel.layers.end(), transpose(l)) == sel.layers.end())
            fail(ErrorKind::NotTransposeClosed, "layer selection misses the transpose of " + l.to_string());
}

std::vector<AltComponent> alt_components(const LayerSelection& sel, int eps) {
    std::vector<AltComponent> out;
    int off = 0;
    for (const auto& l : sel.layers) {
        AltComponent c;
        c.shape = l;
        c.shape_dim = dimension(l);
        if (l.is_symmetric()) {
            c.symmetric = true;
            c.arep = alternating_rep(l, eps);
            c.dim = c.arep->dim();
        } else {
            bool seen = false;
            for (const auto& prev : out)
                if (prev.shape == transpose(l)) seen = true;
            if (seen) continue;
            c.yrep = young_rep(l);
            c.dim = c.yrep->dim();
        }
        c.offset = off;
        off += c.dim;
        out.push_back(std::move(c));
    }
    return out;
}

void apply_components(const std::vector<AltComponent>& comps, const Permutation& g, ComplexMatrix& x) {
    for (const auto& c : comps) {
        ComplexMatrix part = x.middleRows(c.offset, c.dim);
        if (c.symmetric) c.arep->apply(g, part);
        else c.yrep->apply(g, part);
        x.middleRows(c.offset, c.dim) = part;
    }
}

struct AltBuild {
    std::vector<AltComponent> comps;
    ComplexMatrix psi;
    int total = 0;
};

AltBuild build_alternating(const LayerSelection& sel_in, int eps, const ConstructionOptions& options) {
    require_sign(eps);
    LayerSelection sel = make_selection(sel_in.mu, sel_in.layers);
    validate_alternating(sel);
    BigInt dl = layer_dimension(sel.layers);
    check_cap(dl / 2, options);
    AltBuild b;
    b.comps = alt_components(sel, eps);
    for (const auto& c : b.comps) b.total += c.dim;

    auto small = young_rep(sel.mu);
    auto star = tab_star_indices(sel.mu);
    b.psi = ComplexMatrix::Zero(b.total, static_cast<int>(star.size()));
    for (std::size_t col = 0; col < star.size(); ++col) {
        const auto& R = small->tableau(star[col]);
        for (const auto& c : b.comps) {
            double w = sqrt_ratio(c.shape_dim, dl);
            if (c.symmetric) {
                b.psi(c.offset + c.arep->star_index(embed(R, c.shape)), col) = w;
            } else {
                b.psi(c.offset + c.yrep->index_of(embed(R, c.shape)), col) += w;
                // w_S for S of shape lambda' is eps c_S w_{S'}.
                StandardTableau S = embed(R, transpose(c.shape));
                b.psi(c.offset + c.yrep->index_of(transpose_tableau(S)), col) +=
                    w * double(eps) * pair_associator_coefficient(S, sel.mu);
            }
        }
    }
    return b;
}

void make_real_if(Field field, std::vector<ComplexMatrix>& blocks) {
    if (field != Field::Real) return;
    for (auto& b : blocks) {
        if (imaginary_size(b) > 1e-12) fail(ErrorKind::NumericalFailure, "expected a real ensemble");
        b = b.real().cast<cd>();
    }
}

} // namespace

FusionEnsemble alternating_ensemble(const LayerSelection& sel, int eps,
                                    const std::optional<std::vector<Permutation>>& transversal,
                                    const ConstructionOptions& options) {
    AltBuild b = build_alternating(sel, eps, options);
    int n = sel.mu.size() + 1;
    auto t = resolve_transversal(transversal, n, true);
    std::vector<ComplexMatrix> blocks;
    for (const auto& g : t) {
        ComplexMatrix x = b.psi;
        apply_components(b.comps, g, x);
        blocks.push_back(std::move(x));
    }
    Field field = field_for(sel.mu);
    make_real_if(field, blocks);
    LayerSelection sorted = make_selection(sel.mu, sel.layers);
    nlohmann::json meta = {{"construction", "alternating"},
                           {"mu", sel.mu.to_string()},
                           {"layers", layers_json(sorted.layers)},
                           {"epsilon", eps > 0 ? "+" : "-"},
                           {"transversal", transversal_json(t)}};
    for (int delta : {0, 1})
        if (canonical_selection(sel.mu, delta).layers == sorted.layers) meta["delta"] = delta;
    return make_ensemble(field, std::move(blocks), meta);
}

ComplexMatrix alternating_rep_matrix(const LayerSelection& sel, int eps, const Permutation& g) {
    ConstructionOptions unlimited;
    unlimited.max_dim = kMaxRepresentationDim;
    AltBuild b = build_alternating(sel, eps, unlimited);
    ComplexMatrix u = ComplexMatrix::Identity(b.total, b.total);
    apply_components(b.comps, g, u);
    return u;
}

AlternatingParameters alternating_parameters(int a, int c, int delta) {
    if (a < 1 || c < 2) fail(ErrorKind::ConstraintViolation, "need a >= 1 and c >= 2");
    if (delta != 0 && delta != 1) fail(ErrorKind::ConstraintViolation, "delta must be 0 or 1");
    AlternatingParameters p;
    std::vector<int> parts(a, a + c);
    parts.insert(parts.end(), c, a);
    p.mu = Partition(parts);
    p.r = dimension(p.mu) / 2;
    p.n = BigInt(a) * a + 2 * BigInt(a) * c + 1;
    Rational share = delta == 0 ? Rational(BigInt(c) * c, BigInt(a + c) * (a + c))
                                : Rational(BigInt(a) * (a + 2 * c), BigInt(a + c) * (a + c));
    Rational d = share * Rational(p.r * p.n);
    if (boost::multiprecision::denominator(d) != 1) fail(ErrorKind::NumericalFailure, "non-integral dimension");
    p.d = boost::multiprecision::numerator(d);
    p.alpha = alpha_of(p.d, p.r, p.n);
    p.field = (a * (a + 2 * c - 1) / 2) % 2 == 0 ? Field::Real : Field::Complex;
    return p;
}

DecompositionResult decomposition_check(const LayerSelection& sel_in,
                                        const std::optional<std::vector<Permutation>>& transversal,
                                        double tolerance) {
    LayerSelection sel = make_selection(sel_in.mu, sel_in.layers);
    validate_alternating(sel);
    int n = sel.mu.size() + 1;
    auto t = resolve_transversal(transversal, n, true);
    ConstructionOptions options;
    AltBuild plus = build_alternating(sel, 1, options);
    AltBuild minus = build_alternating(sel, -1, options);

    // Coordinates of V_L: every layer in up-set order.
    std::map<std::vector<int>, int> row_of;
    BigInt dl = layer_dimension(sel.layers);
    int total = static_cast<int>(dl);
    RealMatrix psi = RealMatrix::Zero(total, static_cast<int>(dimension(sel.mu)));
    int row = 0;
    for (const auto& l : sel.layers) {
        row_of[l.parts()] = row;
        RealMatrix b = branching_isometry(l, sel.mu);
        psi.middleRows(row, b.rows()) = sqrt_ratio(dimension(l), dl) * b;
        row += static_cast<int>(b.rows());
    }

    auto injection = [&](const AltBuild& build, int eps) {
        ComplexMatrix j = ComplexMatrix::Zero(total, build.total);
        for (const auto& c : build.comps) {
            if (c.symmetric) {
                ComplexMatrix e = eigenspace_injection(c.shape, eps);
                j.block(row_of[c.shape.parts()], c.offset, e.rows(), e.cols()) = e;
            } else {
                ComplexMatrix p = pair_injection(c.shape, sel.mu, eps);
                j.block(row_of[c.shape.parts()], c.offset, c.dim, c.dim) = p.topRows(c.dim);
                j.block(row_of[transpose(c.shape).parts()], c.offset, c.dim, c.dim) = p.bottomRows(c.dim);
            }
        }
        return j;
    };
    ComplexMatrix jl(total, total);
    jl << injection(plus, 1), injection(minus, -1);
    ComplexMatrix jm(psi.cols(), psi.cols());
    jm << eigenspace_injection(sel.mu, 1), eigenspace_injection(sel.mu, -1);

    int hp = plus.total, hm = static_cast<int>(plus.psi.cols());
    DecompositionResult res;
    for (const auto& g : t) {
        RealMatrix x = psi;
        int off = 0;
        for (const auto& l : sel.layers) {
            auto rep = young_rep(l);
            RealMatrix part = x.middleRows(off, rep->dim());
            rep->apply(g, part);
            x.middleRows(off, rep->dim()) = part;
            off += rep->dim();
        }
        ComplexMatrix tilde = jl.adjoint() * x.cast<cd>() * jm;
        ComplexMatrix ap = plus.psi, am = minus.psi;
        apply_components(plus.comps, g, ap);
        apply_components(minus.comps, g, am);
        res.residual = std::max({res.residual, max_abs(tilde.topLeftCorner(hp, hm) - ap),
                                 max_abs(tilde.bottomRightCorner(total - hp, psi.cols() - hm) - am),
                                 max_abs(tilde.topRightCorner(hp, psi.cols() - hm)),
                                 max_abs(tilde.bottomLeftCorner(total - hp, hm))});
    }
    res.holds = res.residual <= tolerance;
    return res;
}

FusionEnsemble generic_orbit_ensemble(const std::vector<LabelledMatrix>& generators,
                                      const std::vector<std::vector<std::string>>& transversal_words,
                                      const ComplexMatrix& w) {
    std::map<std::string, const ComplexMatrix*> by_label;
    bool real = imaginary_size(w) == 0;
    for (const auto& g : generators) {
        if (g.matrix.rows() != w.rows() || g.matrix.cols() != w.rows())
            fail(ErrorKind::SizeMismatch, "generator '" + g.label + "' is not d x d");
        if (isometry_defect(g.matrix) > 1e-8) fail(ErrorKind::NotUnitary, "generator '" + g.label + "' is not unitary");
        by_label[g.label] = &g.matrix;
        real = real && imaginary_size(g.matrix) == 0;
    }
    if (isometry_defect(w) > 1e-8) fail(ErrorKind::NotIsometry, "W is not an isometry");
    std::vector<ComplexMatrix> blocks;
    for (const auto& word : transversal_words) {
        ComplexMatrix x = w;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            auto found = by_label.find(*it);
            if (found == by_label.end()) fail(ErrorKind::ParseError, "unknown generator label '" + *it + "'");
            x = (*found->second) * x;
        }
        blocks.push_back(std::move(x));
    }
    return make_ensemble(real ? Field::Real : Field::Complex, std::move(blocks), {{"construction", "generic"}});
}

std::vector<SnTableRow> sn_table(long max_dim) {
    std::vector<SnTableRow> rows;
    auto push = [&](SingleLayerFamily f, int a, int b, int c) {
        auto p = single_layer_parameters(f, a, b, c);
        if (p.d > max_dim) return false;
        auto [mu, lambda] = single_layer_shapes(f, a, b, c);
        rows.push_back({f, a, b, c, p, mu, lambda});
        return true;
    };
    for (int a = 2;; ++a) {
        if (!push(SingleLayerFamily::TypeI, a, a, 0)) break;
        for (int b = a + 1; push(SingleLayerFamily::TypeI, a, b, 0); ++b) {}
    }
    for (int a = 1;; ++a) {
        if (single_layer_parameters(SingleLayerFamily::TypeIII, a, a, 2).d > max_dim) break;
        for (int b = a;; ++b) {
            if (!push(SingleLayerFamily::TypeIII, a, b, 2)) break;
            for (int c = 3; push(SingleLayerFamily::TypeIII, a, b, c); ++c) {}
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SnTableRow& x, const SnTableRow& y) {
        if (x.params.d != y.params.d) return x.params.d < y.params.d;
        return x.params.n < y.params.n;
    });
    return rows;
}

std::vector<AnTableRow> an_table(long max_dim) {
    std::vector<AnTableRow> rows;
    auto best = [](int a, int c) {
        auto p0 = alternating_parameters(a, c, 0);
        auto p1 = alternating_parameters(a, c, 1);
        return p0.d <= p1.d ? AnTableRow{a, c, 0, p0} : AnTableRow{a, c, 1, p1};
    };
    for (int a = 1;; ++a) {
        if (best(a, 2).params.d > max_dim) break;
        for (int c = 2;; ++c) {
            auto row = best(a, c);
            if (row.params.d > max_dim) break;
            rows.push_back(row);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const AnTableRow& x, const AnTableRow& y) {
        if (x.params.d != y.params.d) return x.params.d < y.params.d;
        return x.params.n < y.params.n;
    });
    return rows;
}

} // namespace eitff
