#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "json_codec.hpp"

namespace coadjoint::cli {

namespace {

constexpr const char* kConventions =
    "Conventions: four-vectors are ordered (x, y, z, t); the metric is G = diag(-1, -1, -1, 1).\n"
    "A point is {\"M\": {\"l\": [3], \"g\": [3]}, \"P\": [4]} or {\"M_matrix\": [[4]x4], \"P\": [4]},\n"
    "where M = [[hat(l), g], [g^T, 0]].";

/// Failure that maps onto an exit code and a one-line error object.
struct Failure {
    int exit_code;
    std::string code;
    std::string message;
};

struct Options {
    std::string input = "-";
    double tol = 1e-8;
    bool pretty = false;
    int parallel = 1;

    // act
    std::string element;

    // sample
    std::string cls;
    double mu = 0.0;
    double beta = 0.0;
    std::string energy = "+";
    std::string helicity = "+";
    std::uint64_t seed = 0;
    int count = 1;
    double max_rapidity = 2.0;
    double max_translation = 10.0;
};

std::string dump(const json& doc, bool pretty) { return pretty ? doc.dump(2) : doc.dump(); }

void write_error(std::ostream& err, const std::string& code, const std::string& message) {
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return read_all(in);
    std::ifstream file(path);
    if (!file) throw Failure{kMalformedInput, "io-error", "cannot open " + path};
    return read_all(file);
}

/// A single document, a JSON array of documents, or newline-delimited JSON.
std::vector<json> parse_documents(const std::string& text) {
    try {
        auto doc = json::parse(text);
        if (doc.is_array()) return {doc.begin(), doc.end()};
        return {doc};
    } catch (const json::parse_error&) {
    }

    std::vector<json> docs;
    std::istringstream lines(text);
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            docs.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw Failure{kMalformedInput, "malformed-json", "line " + std::to_string(number) + ": " + e.what()};
        }
    }
    if (docs.empty()) throw Failure{kMalformedInput, "malformed-json", "input contains no JSON documents"};
    return docs;
}

std::vector<CoadjointPoint> read_points(const Options& opt, std::istream& in, const ToleranceConfig& tol) {
    const auto docs = parse_documents(read_source(opt.input, in));
    std::vector<CoadjointPoint> points;
    points.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        try {
            points.push_back(point_from_json(docs[i], tol));
        } catch (const Error& e) {
            throw Failure{kMalformedInput, std::string(to_string(e.code())), "point " + std::to_string(i) + ": " + e.what()};
        }
    }
    return points;
}

/// Applies `fn` to every point, fanning out over `workers` threads, and
/// returns the results in input order.
template <typename Fn>
auto map_points(const std::vector<CoadjointPoint>& points, int workers, Fn fn) {
    using Result = decltype(fn(points.front()));
    std::vector<Result> results(points.size());
    const auto n = points.size();
    const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 64));
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(points[i]);
        return results;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads) results[i] = fn(points[i]);
        });
    pool.clear();
    return results;
}

struct Row {
    json doc;
    bool out_of_catalog = false;
};

int emit(const std::vector<Row>& rows, const Options& opt, std::ostream& out, std::ostream& err) {
    int code = kSuccess;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << dump(rows[i].doc, opt.pretty) << '\n';
        if (rows[i].out_of_catalog) {
            write_error(err, "out-of-catalog", "point " + std::to_string(i) + ": " + rows[i].doc.value("reason", ""));
            code = kOutOfCatalog;
        }
    }
    return code;
}

int do_classify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err, bool full) {
    const ToleranceConfig tol{opt.tol, ToleranceConfig{}.structural};
    const auto points = read_points(opt, in, tol);
    auto rows = map_points(points, opt.parallel, [&](const CoadjointPoint& nu) {
        if (!full) return Row{report_to_json(nu, classify(nu, tol))};
        const auto cls = classify(nu, tol);
        if (!cls.in_catalog()) return Row{report_to_json(nu, cls), true};
        const auto nf = normal_form(nu, tol);
        return Row{report_to_json(nu, nf.cls, &nf)};
    });
    return emit(rows, opt, out, err);
}

int do_act(const Options& opt, std::istream& in, std::ostream& out) {
    const ToleranceConfig tol{opt.tol, ToleranceConfig{}.structural};
    if (opt.element.empty()) throw Failure{kMalformedInput, "missing-element", "act requires --element FILE|JSON"};

    std::string text = opt.element;
    if (text.find_first_not_of(" \t") == std::string::npos || text[text.find_first_not_of(" \t")] != '{') {
        std::ifstream file(opt.element);
        if (!file) throw Failure{kMalformedInput, "io-error", "cannot open " + opt.element};
        text = read_all(file);
    }
    PoincareElement g;
    try {
        g = element_from_json(json::parse(text), tol);
    } catch (const json::parse_error& e) {
        throw Failure{kMalformedInput, "malformed-json", std::string("--element: ") + e.what()};
    } catch (const Error& e) {
        throw Failure{kMalformedInput, std::string(to_string(e.code())), std::string("--element: ") + e.what()};
    }

    const auto points = read_points(opt, in, tol);
    for (const auto& nu : points) out << dump(point_to_json(coadjoint_act(g, nu)), opt.pretty) << '\n';
    return kSuccess;
}

int do_invariants(const Options& opt, std::istream& in, std::ostream& out) {
    const auto points = read_points(opt, in, ToleranceConfig{opt.tol, ToleranceConfig{}.structural});
    for (const auto& nu : points) out << dump(invariants_to_json(nu), opt.pretty) << '\n';
    return kSuccess;
}

int parse_sign(const std::string& s, const std::string& flag) {
    if (s == "+") return 1;
    if (s == "-") return -1;
    throw Failure{kMalformedInput, "invalid-argument", flag + " must be + or -"};
}

int do_sample(const Options& opt, std::ostream& out) {
    const auto tag = parse_orbit_tag(opt.cls);
    if (!tag)
        throw Failure{kMalformedInput, "invalid-argument",
                      "--class must be massive-spinning, massive-spinless or massless-helicity"};

    auto require_positive = [](double v, const std::string& flag) {
        if (!(v > 0.0) || !std::isfinite(v)) throw Failure{kMalformedInput, "invalid-argument", flag + " must be > 0"};
        return v;
    };

    OrbitClass cls;
    ComponentLabel labels;
    labels.energy_sign = parse_sign(opt.energy, "--energy");
    switch (*tag) {
        case OrbitTag::MassiveSpinning:
            cls = OrbitClass::massive_spinning(require_positive(opt.mu, "--mu"), require_positive(opt.beta, "--beta"));
            labels.spin_sign = labels.energy_sign;
            break;
        case OrbitTag::MassiveSpinless:
            cls = OrbitClass::massive_spinless(require_positive(opt.mu, "--mu"));
            break;
        case OrbitTag::MasslessHelicity:
            cls = OrbitClass::massless_helicity(require_positive(opt.beta, "--beta"));
            labels.helicity_sign = parse_sign(opt.helicity, "--helicity");
            break;
        case OrbitTag::OutOfCatalog:
            break;
    }
    if (opt.count < 0) throw Failure{kMalformedInput, "invalid-argument", "--count must be non-negative"};

    SamplerConfig cfg;
    cfg.seed = opt.seed;
    cfg.max_rapidity = opt.max_rapidity;
    cfg.max_translation = opt.max_translation;

    json arr = json::array();
    for (const auto& nu : sample_orbit(cls, labels, cfg, opt.count)) arr.push_back(point_to_json(nu));
    out << dump(arr, opt.pretty) << '\n';
    return kSuccess;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--input", opt.input, "Input file, or - for standard input")->capture_default_str();
    sub->add_option("--tol", opt.tol, "Classification tolerance (relative)")->capture_default_str();
    sub->add_flag("--pretty", opt.pretty, "Pretty-print JSON output");
    sub->add_option("--parallel", opt.parallel, "Worker threads for batch input")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Coadjoint orbits of the full Poincare group: classification, normal forms, invariants.\n" +
                 std::string(kConventions)};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "Classify points; one report per point");
    auto* normal_cmd = app.add_subcommand("normal-form", "Classify and reduce to the canonical representative");
    auto* act_cmd = app.add_subcommand("act", "Apply a group element through the coadjoint action");
    auto* inv_cmd = app.add_subcommand("invariants", "Casimir values and polarization vector");
    auto* sample_cmd = app.add_subcommand("sample", "Sample points on a catalog orbit");
    for (auto* sub : {classify_cmd, normal_cmd, act_cmd, inv_cmd}) add_common(sub, opt);

    act_cmd->add_option("--element", opt.element,
                        "Group element: file or inline JSON {\"S\":[[4]x4],\"C\":[4]} or {\"involution\":\"space|time\"}");

    sample_cmd->add_option("--class", opt.cls, "massive-spinning | massive-spinless | massless-helicity")->required();
    sample_cmd->add_option("--mu", opt.mu, "Mass modulus (> 0)");
    sample_cmd->add_option("--beta", opt.beta, "Spin parameter (> 0)");
    sample_cmd->add_option("--energy", opt.energy, "Energy sign, + or -")->capture_default_str();
    sample_cmd->add_option("--helicity", opt.helicity, "Helicity sign for massless orbits, + or -")->capture_default_str();
    sample_cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sample_cmd->add_option("--count", opt.count, "Number of points")->capture_default_str();
    sample_cmd->add_option("--max-rapidity", opt.max_rapidity, "Bound on boost rapidity")->capture_default_str();
    sample_cmd->add_option("--max-translation", opt.max_translation, "Bound on translation norm")->capture_default_str();
    sample_cmd->add_flag("--pretty", opt.pretty, "Pretty-print JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage", e.what());
        return kMalformedInput;
    }

    try {
        if (classify_cmd->parsed()) return do_classify(opt, in, out, err, false);
        if (normal_cmd->parsed()) return do_classify(opt, in, out, err, true);
        if (act_cmd->parsed()) return do_act(opt, in, out);
        if (inv_cmd->parsed()) return do_invariants(opt, in, out);
        if (sample_cmd->parsed()) return do_sample(opt, out);
    } catch (const Failure& f) {
        write_error(err, f.code, f.message);
        return f.exit_code;
    } catch (const Error& e) {
        write_error(err, std::string(to_string(e.code())), e.what());
        return kMalformedInput;
    }
    return kMalformedInput;
}

}  // namespace coadjoint::cli
