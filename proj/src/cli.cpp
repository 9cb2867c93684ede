#include "eitff/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "eitff/alternating_rep.hpp"
#include "eitff/constructions.hpp"
#include "eitff/error.hpp"
#include "eitff/fusion.hpp"
#include "eitff/io.hpp"

namespace eitff {

using nlohmann::json;

std::optional<std::string> process_env(const std::string& name) {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
}

namespace {

struct Options {
    std::string lambda, mu, layers, delta, epsilon, transversal, out, csv, tolerance, max_dim, spec;
    std::string in, max_n, a, b, c, f, h, construct_max_dim, format;
    bool no_pairs = false;
};

void add_construction_common(CLI::App* app, Options& o) {
    app->add_option("--transversal", o.transversal, "Coset representatives t_1;...;t_n (cycle or one-line notation)");
    app->add_option("--out", o.out, "Write the ensemble JSON here instead of stdout");
    app->add_option("--csv", o.csv, "Also write the synthesis matrix as CSV (real ensembles)");
    app->add_option("--tolerance", o.tolerance, "Certification tolerance (default 1e-9)");
    app->add_option("--max-dim", o.max_dim, "Refuse ambient dimensions above this (default 5000)");
}

std::unique_ptr<CLI::App> build_app(Options& o) {
    auto app = std::make_unique<CLI::App>("Construct and certify equi-isoclinic tight fusion frames from symmetric-group representations", "eitff");
    app->require_subcommand(1);
    app->fallthrough();
    app->add_option("--config", o.spec, "JSON file of option defaults (flags and EITFF_* variables take precedence)");

    auto* construct = app->add_subcommand("construct", "Build a subspace ensemble");
    construct->require_subcommand(1);
    auto* single = construct->add_subcommand("single-layer", "Orbit of the branching subspace V_mu in V_lambda");
    single->add_option("--lambda", o.lambda, "Partition of n, e.g. 3,2");
    single->add_option("--mu", o.mu, "Partition of n-1 below lambda");
    add_construction_common(single, o);
    auto* multi = construct->add_subcommand("multi-layer", "Orbit of V_mu inside a sum of layers");
    multi->add_option("--mu", o.mu, "Partition of n-1");
    multi->add_option("--layers", o.layers, "Shapes above mu separated by ';', e.g. 4,1,1;3,2,1");
    multi->add_option("--delta", o.delta, "Canonical subset L_0 or L_1");
    add_construction_common(multi, o);
    auto* alt = construct->add_subcommand("alternating", "Alternating-group piece of a transpose-closed selection");
    alt->add_option("--mu", o.mu, "Symmetric partition with an even number of distinct parts");
    alt->add_option("--layers", o.layers, "Transpose-closed shapes above mu separated by ';'");
    alt->add_option("--delta", o.delta, "Canonical subset L_0 or L_1");
    alt->add_option("--epsilon", o.epsilon, "Eigenvalue of the associator, + or -");
    add_construction_common(alt, o);
    auto* generic = construct->add_subcommand("generic", "Orbit of W under words in user-supplied unitaries");
    generic->add_option("--spec", o.in, "JSON with generators, words and W");
    add_construction_common(generic, o);

    auto* certify_cmd = app->add_subcommand("certify", "Certify an ensemble file");
    certify_cmd->add_option("--in", o.in, "Ensemble JSON");
    certify_cmd->add_option("--out", o.out, "Write the report here instead of stdout");
    certify_cmd->add_option("--tolerance", o.tolerance, "Certification tolerance (default 1e-9)");
    certify_cmd->add_flag("--no-pairs", o.no_pairs, "Omit per-pair angles and distances");

    auto* search = app->add_subcommand("search-isoclinic", "Exact search over canonical subsets, one JSON certificate per line");
    search->add_option("--max-n", o.max_n, "Largest n to search");

    auto* cert = app->add_subcommand("certificate", "Exact isoclinic certificate of one canonical subset");
    cert->add_option("--mu", o.mu, "Partition of n-1");
    cert->add_option("--delta", o.delta, "0 or 1");

    auto* family = app->add_subcommand("family", "Infinite families of isoclinic partitions");
    family->require_subcommand(1);
    auto* three = family->add_subcommand("three-part", "Three distinct parts from (a, f, h, b)");
    three->set_help_flag("--help", "Print this help message and exit");
    three->add_option("--a", o.a, "a");
    three->add_option("--f", o.f, "f");
    three->add_option("--h", o.h, "h");
    three->add_option("--b", o.b, "b");
    auto* four = family->add_subcommand("four-part", "Four distinct parts from (a, b, c)");
    four->add_option("--a", o.a, "a");
    four->add_option("--b", o.b, "b");
    four->add_option("--c", o.c, "c");

    auto* table = app->add_subcommand("table", "Tabulate parameters of the symmetric or alternating families");
    table->require_subcommand(1);
    for (const char* name : {"sn", "an"}) {
        auto* t = table->add_subcommand(name, std::string(name) == "sn" ? "Single-layer S_n families" : "Two-part A_n families");
        t->add_option("--max-dim", o.max_dim, "Largest d to list");
        t->add_option("--construct-max-dim", o.construct_max_dim, "Construct and certify rows up to this d (default 500)");
        t->add_option("--tolerance", o.tolerance, "Certification tolerance (default 1e-9)");
        t->add_option("--format", o.format, "text or json");
    }
    return app;
}

CLI::App* leaf_of(CLI::App* app) {
    for (;;) {
        auto subs = app->get_subcommands();
        if (subs.empty()) return app;
        app = subs.front();
    }
}

std::string path_of(CLI::App* app) {
    std::string path;
    for (;;) {
        auto subs = app->get_subcommands();
        if (subs.empty()) return path;
        app = subs.front();
        path += (path.empty() ? "" : " ") + app->get_name();
    }
}

bool given(const std::vector<std::string>& args, const std::string& lname) {
    std::string flag = "--" + lname;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

std::string env_name(const std::string& lname) {
    std::string s = "EITFF_";
    for (char ch : lname) s += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

void parse_args(CLI::App& app, std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    app.parse(args);
}

// Options not on the command line are filled from the environment, then
// from the config file, by appending them as explicit arguments.
std::vector<std::string> with_defaults(const std::vector<std::string>& args, const EnvLookup& env) {
    Options probe;
    auto app = build_app(probe);
    parse_args(*app, args);
    CLI::App* leaf = leaf_of(app.get());

    std::string config_path = probe.spec;
    if (config_path.empty()) config_path = env("EITFF_CONFIG").value_or("");
    json config = json::object();
    if (!config_path.empty()) {
        try {
            config = json::parse(read_text_file(config_path));
        } catch (const json::exception& e) {
            fail(ErrorKind::ParseError, "config file: " + std::string(e.what()));
        }
        if (!config.is_object()) fail(ErrorKind::ParseError, "config file must hold a JSON object");
    }

    std::vector<std::string> out = args;
    for (const CLI::Option* opt : leaf->get_options()) {
        if (opt->get_lnames().empty()) continue;
        const std::string& lname = opt->get_lnames().front();
        if (lname == "help" || given(args, lname)) continue;
        std::optional<std::string> value = env(env_name(lname));
        if (!value && config.contains(lname)) {
            const json& v = config[lname];
            value = v.is_string() ? v.get<std::string>() : v.dump();
        }
        if (!value) continue;
        if (opt->get_type_size() == 0) {
            if (*value == "1" || *value == "true") out.push_back("--" + lname);
        } else {
            out.push_back("--" + lname + "=" + *value);
        }
    }
    return out;
}

long parse_long(const std::string& text, const char* what, long fallback) {
    if (text.empty()) return fallback;
    char* end = nullptr;
    long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0') fail(ErrorKind::ParseError, std::string("bad integer for ") + what + ": '" + text + "'");
    return v;
}

int require_int(const std::string& text, const char* what) {
    if (text.empty()) fail(ErrorKind::ParseError, std::string("missing --") + what);
    long v = parse_long(text, what, 0);
    if (v < -1000000 || v > 1000000) fail(ErrorKind::ConstraintViolation, std::string(what) + " out of range");
    return static_cast<int>(v);
}

double parse_tolerance(const std::string& text) {
    if (text.empty()) return kDefaultTolerance;
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !(v > 0)) fail(ErrorKind::ParseError, "bad tolerance '" + text + "'");
    return v;
}

Partition require_partition(const std::string& text, const char* what) {
    if (text.empty()) fail(ErrorKind::ParseError, std::string("missing --") + what);
    return parse_partition(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
    return out;
}

std::optional<std::vector<Permutation>> parse_transversal(const std::string& text, int n) {
    if (text.empty()) return std::nullopt;
    std::vector<Permutation> t;
    for (const auto& item : split(text, ';')) t.push_back(parse_permutation(item, n));
    return t;
}

int parse_epsilon(const std::string& text) {
    if (text.empty() || text == "+" || text == "+1" || text == "1") return 1;
    if (text == "-" || text == "-1") return -1;
    fail(ErrorKind::ParseError, "epsilon must be + or -");
}

LayerSelection parse_selection(const Options& o) {
    Partition mu = require_partition(o.mu, "mu");
    if (!o.layers.empty() && !o.delta.empty()) fail(ErrorKind::ConstraintViolation, "give --layers or --delta, not both");
    if (!o.delta.empty()) {
        int delta = require_int(o.delta, "delta");
        if (delta != 0 && delta != 1) fail(ErrorKind::ConstraintViolation, "delta must be 0 or 1");
        return canonical_selection(mu, delta);
    }
    if (o.layers.empty()) fail(ErrorKind::ParseError, "missing --layers or --delta");
    std::vector<Partition> layers;
    for (const auto& item : split(o.layers, ';')) layers.push_back(parse_partition(item));
    return make_selection(mu, layers);
}

void emit_ensemble(const FusionEnsemble& e, const Options& o, std::ostream& out) {
    std::string text = ensemble_to_json(e).dump() + "\n";
    if (o.out.empty()) out << text;
    else write_text_file(o.out, text);
    if (!o.csv.empty()) {
        std::ostringstream ss;
        write_csv(e, ss);
        write_text_file(o.csv, ss.str());
    }
}

int finish_construct(const FusionEnsemble& e, const Options& o, Classification predicted,
                     std::optional<Field> predicted_field, std::ostream& out, std::ostream& err) {
    auto report = certify(e, parse_tolerance(o.tolerance));
    emit_ensemble(e, o, out);
    bool matches = report.classification == predicted && (!predicted_field || *predicted_field == e.field);
    json summary = report_to_json(report, false);
    summary["predicted"] = to_string(predicted);
    summary["matches_prediction"] = matches;
    summary["metadata"] = e.metadata;
    (o.out.empty() ? err : out) << summary.dump(2) << "\n";
    if (!matches)
        fail(ErrorKind::CertificationMismatch, std::string("certified ") + to_string(report.classification) +
                                                   ", theory predicts " + to_string(predicted));
    return kExitOk;
}

ConstructionOptions construction_options(const Options& o) {
    ConstructionOptions c;
    c.max_dim = parse_long(o.max_dim, "max-dim", c.max_dim);
    if (c.max_dim < 1) fail(ErrorKind::ConstraintViolation, "max-dim must be positive");
    return c;
}

int cmd_single(const Options& o, std::ostream& out, std::ostream& err) {
    Partition lambda = require_partition(o.lambda, "lambda");
    Partition mu = require_partition(o.mu, "mu");
    auto e = single_layer_ensemble(lambda, mu, parse_transversal(o.transversal, lambda.size()), construction_options(o));
    auto cls = classify_single_layer(lambda, mu);
    e.metadata["family"] = to_string(cls.family);
    Classification predicted = cls.family == SingleLayerFamily::EquichordalOnly ? Classification::ECTFF : Classification::EITFF;
    return finish_construct(e, o, predicted, Field::Real, out, err);
}

int cmd_multi(const Options& o, std::ostream& out, std::ostream& err) {
    auto sel = parse_selection(o);
    auto e = multi_layer_ensemble(sel, parse_transversal(o.transversal, sel.mu.size() + 1), construction_options(o));
    auto cert = selection_certificate(sel);
    e.metadata["distance_condition"] = cert.holds;
    Classification predicted = cert.holds ? Classification::EITFF : Classification::ECTFF;
    return finish_construct(e, o, predicted, Field::Real, out, err);
}

int cmd_alternating(const Options& o, std::ostream& out, std::ostream& err) {
    auto sel = parse_selection(o);
    int eps = parse_epsilon(o.epsilon);
    auto e = alternating_ensemble(sel, eps, parse_transversal(o.transversal, sel.mu.size() + 1), construction_options(o));
    auto cert = selection_certificate(sel);
    e.metadata["distance_condition"] = cert.holds;
    Classification predicted = cert.holds ? Classification::EITFF : Classification::ECTFF;
    return finish_construct(e, o, predicted, field_for(sel.mu), out, err);
}

int cmd_generic(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.in.empty()) fail(ErrorKind::ParseError, "missing --spec");
    json spec;
    try {
        spec = json::parse(read_text_file(o.in));
        std::vector<LabelledMatrix> gens;
        for (const auto& g : spec.at("generators")) gens.push_back({g.at("label").get<std::string>(), matrix_from_json(g.at("matrix"))});
        std::vector<std::vector<std::string>> words;
        for (const auto& w : spec.at("words")) words.push_back(w.get<std::vector<std::string>>());
        ComplexMatrix w = matrix_from_json(spec.at("W"));
        auto e = generic_orbit_ensemble(gens, words, w);
        if (e.d > construction_options(o).max_dim) fail(ErrorKind::ResourceLimit, "ambient dimension exceeds the cap");
        auto report = certify(e, parse_tolerance(o.tolerance));
        emit_ensemble(e, o, out);
        (o.out.empty() ? err : out) << report_to_json(report, false).dump(2) << "\n";
        return kExitOk;
    } catch (const json::exception& ex) {
        fail(ErrorKind::ParseError, std::string("generic spec: ") + ex.what());
    }
}

int cmd_certify(const Options& o, std::ostream& out) {
    if (o.in.empty()) fail(ErrorKind::ParseError, "missing --in");
    json j;
    try {
        j = json::parse(read_text_file(o.in));
    } catch (const json::exception& ex) {
        fail(ErrorKind::ParseError, std::string("ensemble file: ") + ex.what());
    }
    auto e = ensemble_from_json(j);
    auto report = certify(e, parse_tolerance(o.tolerance));
    std::string text = report_to_json(report, !o.no_pairs).dump(2) + "\n";
    if (o.out.empty()) out << text;
    else write_text_file(o.out, text);
    return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    int max_n = require_int(o.max_n, "max-n");
    if (max_n < 2) fail(ErrorKind::ConstraintViolation, "max-n must be at least 2");
    if (max_n > 40) fail(ErrorKind::ResourceLimit, "max-n above 40 is not searched exhaustively");
    for (int n = 2; n <= max_n; ++n)
        for (const auto& mu : partitions_of(n - 1))
            for (int delta : {0, 1}) {
                auto cert = isoclinic_certificate(mu, delta);
                if (cert.holds) out << certificate_to_json(cert).dump() << "\n" << std::flush;
            }
    return kExitOk;
}

int cmd_certificate(const Options& o, std::ostream& out) {
    Partition mu = require_partition(o.mu, "mu");
    int delta = require_int(o.delta, "delta");
    if (delta != 0 && delta != 1) fail(ErrorKind::ConstraintViolation, "delta must be 0 or 1");
    out << certificate_to_json(isoclinic_certificate(mu, delta)).dump(2) << "\n";
    return kExitOk;
}

int emit_family(const FamilyMember& m, std::ostream& out) {
    json j = {{"mu", m.mu.to_string()},
              {"parameters", m.parameters},
              {"certificates", {certificate_to_json(m.even), certificate_to_json(m.odd)}}};
    out << j.dump(2) << "\n";
    return kExitOk;
}

std::string pad(const std::string& s, std::size_t width) { return std::string(width > s.size() ? width - s.size() : 0, ' ') + s; }

void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "  " : "") << pad(r[c], width[c]);
        out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::string verdict(const CertificationReport& rep, const Rational& alpha, std::optional<Field> field) {
    bool ok = rep.classification == Classification::EITFF && rep.alpha &&
              std::abs(*rep.alpha - to_double(alpha)) <= rep.tolerance && (!field || *field == rep.field);
    return ok ? "EITFF" : std::string("mismatch:") + to_string(rep.classification);
}

int cmd_table(const std::string& which, const Options& o, std::ostream& out) {
    long max_dim = parse_long(o.max_dim, "max-dim", 500);
    long build_dim = parse_long(o.construct_max_dim, "construct-max-dim", 500);
    double tol = parse_tolerance(o.tolerance);
    std::string format = o.format.empty() ? "text" : o.format;
    if (format != "text" && format != "json") fail(ErrorKind::ParseError, "format must be text or json");
    if (max_dim > 1000000000L) fail(ErrorKind::ResourceLimit, "max-dim too large to tabulate");
    json rows_json = json::array();
    std::vector<std::vector<std::string>> rows;
    if (which == "sn") {
        for (const auto& row : sn_table(max_dim)) {
            std::string status = "-";
            if (row.params.d <= build_dim) {
                auto e = single_layer_ensemble(row.lambda, row.mu);
                status = verdict(certify(e, tol), row.params.alpha, std::nullopt);
            }
            rows.push_back({row.params.d.str(), row.params.r.str(), row.params.n.str(), to_fraction_string(row.params.alpha),
                            to_string(row.family), std::to_string(row.a), std::to_string(row.b),
                            row.family == SingleLayerFamily::TypeIII ? std::to_string(row.c) : "-",
                            row.mu.to_string(), row.lambda.to_string(), status});
            json j = parameters_to_json(row.params);
            j["family"] = to_string(row.family);
            j["a"] = row.a;
            j["b"] = row.b;
            if (row.family == SingleLayerFamily::TypeIII) j["c"] = row.c;
            j["mu"] = row.mu.to_string();
            j["lambda"] = row.lambda.to_string();
            j["certified"] = status;
            rows_json.push_back(j);
        }
        if (format == "text") print_table({"d", "r", "n", "alpha", "family", "a", "b", "c", "mu", "lambda", "certified"}, rows, out);
    } else {
        for (const auto& row : an_table(max_dim)) {
            std::string status = "-";
            if (row.params.d <= build_dim) {
                auto e = alternating_ensemble(canonical_selection(row.params.mu, row.delta), 1);
                status = verdict(certify(e, tol), row.params.alpha, row.params.field);
            }
            rows.push_back({field_tag(row.params.field), row.params.d.str(), row.params.r.str(), row.params.n.str(),
                            to_fraction_string(row.params.alpha), std::to_string(row.a), std::to_string(row.c),
                            std::to_string(row.delta), row.params.mu.to_string(), status});
            json j = parameters_to_json({row.params.d, row.params.r, row.params.n, row.params.alpha});
            j["field"] = field_tag(row.params.field);
            j["a"] = row.a;
            j["c"] = row.c;
            j["delta"] = row.delta;
            j["mu"] = row.params.mu.to_string();
            j["certified"] = status;
            rows_json.push_back(j);
        }
        if (format == "text") print_table({"field", "d", "r", "n", "alpha", "a", "c", "delta", "mu", "certified"}, rows, out);
    }
    if (format == "json") out << rows_json.dump(2) << "\n";
    return kExitOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ResourceLimit: return kExitResource;
    case ErrorKind::CertificationMismatch: return kExitMismatch;
    case ErrorKind::NumericalFailure: return kExitInternal;
    default: return kExitUsage;
    }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    Options o;
    auto app = build_app(o);
    try {
        auto full = with_defaults(args, env);
        parse_args(*app, full);
        std::string path = path_of(app.get());
        if (path == "construct single-layer") return cmd_single(o, out, err);
        if (path == "construct multi-layer") return cmd_multi(o, out, err);
        if (path == "construct alternating") return cmd_alternating(o, out, err);
        if (path == "construct generic") return cmd_generic(o, out, err);
        if (path == "certify") return cmd_certify(o, out);
        if (path == "search-isoclinic") return cmd_search(o, out);
        if (path == "certificate") return cmd_certificate(o, out);
        if (path == "family three-part")
            return emit_family(three_part_family(require_int(o.a, "a"), require_int(o.f, "f"), require_int(o.h, "h"), require_int(o.b, "b")), out);
        if (path == "family four-part")
            return emit_family(four_part_family(require_int(o.a, "a"), require_int(o.b, "b"), require_int(o.c, "c")), out);
        if (path == "table sn") return cmd_table("sn", o, out);
        if (path == "table an") return cmd_table("an", o, out);
        report_error(err, "UsageError", "unknown command");
        return kExitUsage;
    } catch (const CLI::CallForHelp&) {
        out << app->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app->help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        report_error(err, to_string(e.kind()), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        report_error(err, "InternalError", e.what());
        return kExitInternal;
    }
}

} // namespace eitff
