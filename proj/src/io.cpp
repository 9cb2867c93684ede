#include "eitff/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "eitff/error.hpp"

namespace eitff {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

double read_number(const json& j) {
    if (!j.is_number()) fail(ErrorKind::ParseError, "expected a number");
    return j.get<double>();
}

cd read_entry(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) fail(ErrorKind::ParseError, "complex entries are [re, im]");
        return {read_number(j[0]), read_number(j[1])};
    }
    return {read_number(j), 0.0};
}

int read_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) fail(ErrorKind::ParseError, std::string("missing integer '") + key + "'");
    return j[key].get<int>();
}

} // namespace

json matrix_to_json(const ComplexMatrix& m, bool as_complex) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            if (as_complex) row.push_back({m(i, k).real(), m(i, k).imag()});
            else row.push_back(m(i, k).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) fail(ErrorKind::ParseError, "matrix must be a nonempty array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            fail(ErrorKind::ParseError, "matrix rows have different lengths");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = read_entry(row[k]);
    }
    return m;
}

json ensemble_to_json(const FusionEnsemble& e) {
    json blocks = json::array();
    for (const auto& b : e.blocks) blocks.push_back(matrix_to_json(b, e.field == Field::Complex));
    return {{"field", field_tag(e.field)}, {"d", e.d}, {"r", e.r}, {"n", e.n}, {"isometries", blocks}, {"metadata", e.metadata}};
}

FusionEnsemble ensemble_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "ensemble file must be a JSON object");
    if (!j.contains("field") || !j["field"].is_string()) fail(ErrorKind::ParseError, "missing field tag");
    std::string tag = j["field"];
    if (tag != "R" && tag != "C") fail(ErrorKind::ParseError, "field must be \"R\" or \"C\"");
    Field field = tag == "R" ? Field::Real : Field::Complex;
    int d = read_int(j, "d"), r = read_int(j, "r"), n = read_int(j, "n");
    if (!j.contains("isometries") || !j["isometries"].is_array()) fail(ErrorKind::ParseError, "missing isometries");
    const auto& iso = j["isometries"];
    if (static_cast<int>(iso.size()) != n) fail(ErrorKind::SizeMismatch, "isometry count differs from n");
    std::vector<ComplexMatrix> blocks;
    for (const auto& b : iso) {
        ComplexMatrix m = matrix_from_json(b);
        if (m.rows() != d || m.cols() != r) fail(ErrorKind::SizeMismatch, "isometry is not d x r");
        if (field == Field::Real && imaginary_size(m) > 0) fail(ErrorKind::InvalidEnsemble, "complex entry in a real ensemble");
        blocks.push_back(std::move(m));
    }
    FusionEnsemble e;
    e.field = field;
    e.d = d;
    e.r = r;
    e.n = n;
    e.blocks = std::move(blocks);
    if (j.contains("metadata")) e.metadata = j["metadata"];
    validate_ensemble(e, 1e-9);
    return e;
}

json report_to_json(const CertificationReport& r, bool with_pairs) {
    json out = {
        {"field", field_tag(r.field)},
        {"d", r.d},
        {"r", r.r},
        {"n", r.n},
        {"tolerance", r.tolerance},
        {"classification", to_string(r.classification)},
        {"tight", r.tight},
        {"tight_constant", r.tight_constant},
        {"tightness_residual", r.tightness_residual},
        {"equichordal", r.equichordal},
        {"isoclinic", r.isoclinic},
        {"alpha", optional_number(r.alpha)},
        {"expected_alpha", optional_number(r.expected_alpha)},
        {"spectral_min", r.spectral_min},
        {"chordal_min", r.chordal_min},
        {"welch_spectral", optional_number(r.welch_spectral)},
        {"welch_chordal", optional_number(r.welch_chordal)},
        {"lemmens_seidel_bound", optional_number(r.lemmens_seidel_bound)},
    };
    if (with_pairs) {
        json pairs = json::array();
        for (const auto& p : r.pairs)
            pairs.push_back({{"i", p.i},
                             {"j", p.j},
                             {"principal_angles", p.principal_angles},
                             {"spectral", p.spectral},
                             {"chordal", p.chordal},
                             {"alpha", p.alpha},
                             {"isoclinic_defect", p.isoclinic_defect}});
        out["pairs"] = std::move(pairs);
    }
    return out;
}

json certificate_to_json(const IsoclinicCertificate& c) {
    json layers = json::array();
    for (const auto& l : c.layers) layers.push_back(l.to_string());
    json boxes = json::array();
    for (const auto& b : c.removable) boxes.push_back({b.row, b.col});
    json s = json::array();
    for (const auto& q : c.s) s.push_back(to_fraction_string(q));
    return {{"mu", c.mu.to_string()},
            {"delta", c.delta},
            {"layers", layers},
            {"removable_boxes", boxes},
            {"s", s},
            {"beta", to_fraction_string(c.beta)},
            {"beta_squared", to_fraction_string(c.beta_squared)},
            {"holds", c.holds},
            {"sign_pattern", c.sign_pattern},
            {"d", c.d.str()},
            {"r", c.r.str()},
            {"n", c.n.str()},
            {"alpha", to_fraction_string(c.alpha)}};
}

json parameters_to_json(const ExactParameters& p) {
    return {{"d", p.d.str()}, {"r", p.r.str()}, {"n", p.n.str()}, {"alpha", to_fraction_string(p.alpha)}};
}

void write_csv(const FusionEnsemble& e, std::ostream& out) {
    if (e.field != Field::Real) fail(ErrorKind::ConstraintViolation, "CSV export is for real ensembles only");
    ComplexMatrix phi = synthesis_matrix(e);
    std::ostringstream ss;
    ss << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (Eigen::Index i = 0; i < phi.rows(); ++i) {
        for (Eigen::Index k = 0; k < phi.cols(); ++k) {
            if (k) ss << ',';
            ss << phi(i, k).real();
        }
        ss << '\n';
    }
    out << ss.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, "cannot write " + path);
    out << text;
    if (!out) fail(ErrorKind::IoError, "write failed for " + path);
}

} // namespace eitff
