#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcore/bar_partition.hpp"
#include "simcore/core_quotient.hpp"
#include "simcore/encodings.hpp"
#include "simcore/lattice.hpp"
#include "simcore/oracle.hpp"
#include "simcore/partition.hpp"
#include "simcore/series.hpp"
#include "simcore/verify.hpp"

namespace simcore {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int s = 0;
    int t = 0;
    int g = 0;
    int N = 60;
    int modulus = 0;
    std::string quantity;
    std::string variant = "straight";
    std::string gf;
    std::string kind;
    std::string map;
    std::string input;
    std::string suite = "all";
    std::string format;
    std::string output;
};

int default_truncation() {
    const char* value = std::getenv(kTruncationEnv);
    if (value == nullptr || *value == '\0') return 60;
    std::size_t used = 0;
    const int n = std::stoi(value, &used);
    if (used != std::string(value).size() || n < 0) {
        throw std::invalid_argument(std::string(kTruncationEnv) + " must be a nonnegative integer");
    }
    return n;
}

void need(int value, const char* flag) {
    if (value == 0) {
        throw std::invalid_argument(std::string("missing required option ") + flag);
    }
}

json number(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const BarPartition& b) {
    json j;
    j["kind"] = "bar";
    j["parts"] = b.parts();
    return j;
}

json to_json(const StraightTower& tower) {
    json j;
    j["g"] = tower.g;
    j["core"] = tower.core.parts();
    json q = json::array();
    for (const auto& c : tower.quotient) q.push_back(c.parts());
    j["quotient"] = q;
    j["weight"] = tower.weight;
    return j;
}

json to_json(const BarTower& tower) {
    json j;
    j["kind"] = "bar";
    j["g"] = tower.g;
    j["core"] = tower.core.parts();
    json q = json::array();
    q.push_back(tower.bar_component.parts());
    for (const auto& c : tower.quotient) q.push_back(c.parts());
    j["quotient"] = q;
    j["weight"] = tower.weight;
    return j;
}

json to_json(const MonotonicPath& path) {
    json j;
    j["rows"] = path.rows();
    j["cols"] = path.cols();
    j["steps"] = path.steps();
    return j;
}

json tuple_json(int t, const std::vector<int>& entries) {
    json j;
    j["t"] = t;
    j["entries"] = entries;
    return j;
}

std::vector<int> parse_parts(const std::string& text) {
    const json j = json::parse(text);
    const json& parts = j.is_object() ? j.at("parts") : j;
    if (!parts.is_array()) {
        throw std::invalid_argument("input must be a JSON array of integers or an object with \"parts\"");
    }
    std::vector<int> out;
    for (const auto& x : parts) {
        if (!x.is_number_integer()) {
            throw std::invalid_argument("partition parts must be integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    const auto parts = parse_parts(text);
    for (int x : parts) {
        if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    return Partition(parts);
}

BarPartition parse_bar(const std::string& text) { return BarPartition(parse_parts(text)); }

std::string parse_steps(const std::string& text) {
    const json j = json::parse(text);
    if (j.is_string()) return j.get<std::string>();
    if (j.is_object()) return j.at("steps").get<std::string>();
    throw std::invalid_argument("path input must be a JSON string of R/U steps");
}

MonotonicPath parse_path(const std::string& text, int rows, int cols) {
    return MonotonicPath(rows, cols, parse_steps(text));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output);
    if (!file) {
        throw std::runtime_error("cannot open " + o.output);
    }
    file << text;
}

TruncatedSeries build_series(const Options& o) {
    const auto& gf = o.gf;
    if (gf == "partition") return partition_gf(o.N);
    if (gf == "core" || gf == "selfconj-core" || gf == "barcore") {
        need(o.t, "-t");
        if (gf == "core") return core_gf(o.t, o.N);
        if (gf == "selfconj-core") return selfconj_core_gf(o.t, o.N);
        return barcore_gf(o.t, o.N);
    }
    if (gf == "psi" || gf == "psi-star" || gf == "psi-bar") {
        need(o.s, "-s");
        need(o.t, "-t");
        if (gf == "psi") return psi_st_gf(o.s, o.t, o.N);
        if (gf == "psi-star") {
            if (std::gcd(o.s, o.t) == 1) return selfconj_st_core_polynomial(o.s, o.t, o.N);
            return psi_star_st_gf(o.s, o.t, o.N);
        }
        return psi_bar_st_gf(o.s, o.t, o.N);
    }
    throw std::invalid_argument("unknown generating function: " + gf);
}

std::string series_text(const Options& o, const TruncatedSeries& series) {
    if (o.format == "json") {
        json j;
        j["gf"] = o.gf;
        j["truncation"] = series.truncation();
        json c = json::array();
        for (const auto& x : series.coeffs()) c.push_back(number(x));
        j["coefficients"] = c;
        return j.dump() + "\n";
    }
    std::string text = "n,coefficient\n";
    for (int n = 0; n <= series.truncation(); ++n) {
        text += std::to_string(n) + "," + series[n].str() + "\n";
    }
    return text;
}

oracle::Variant parse_variant(const std::string& v) {
    if (v == "straight") return oracle::Variant::straight;
    if (v == "selfconj") return oracle::Variant::selfconj;
    if (v == "bar") return oracle::Variant::bar;
    throw std::invalid_argument("unknown variant: " + v);
}

int run_count(const Options& o, std::ostream& out) {
    const auto& q = o.quantity;
    if (q == "extremal") {
        need(o.s, "-s");
        need(o.t, "-t");
        const auto stats = oracle::extremal_stats(o.s, o.t);
        if (o.format == "json") {
            json j;
            j["s"] = o.s;
            j["t"] = o.t;
            j["total_count"] = stats.total_count;
            j["max_size"] = stats.max_size;
            emit(o, j.dump() + "\n", out);
        } else {
            emit(o, "total_count,max_size\n" + std::to_string(stats.total_count) + "," + std::to_string(stats.max_size) + "\n",
                 out);
        }
        return 0;
    }
    oracle::CountTable table;
    if (q == "cores" || q == "selfconj-cores" || q == "barcores") {
        need(o.t, "-t");
        table = q == "cores"            ? oracle::core_counts(o.t, o.N)
                : q == "selfconj-cores" ? oracle::selfconj_core_counts(o.t, o.N)
                                        : oracle::barcore_counts(o.t, o.N);
    } else if (q == "st-cores" || q == "selfconj-st-cores" || q == "stbar-cores") {
        need(o.s, "-s");
        need(o.t, "-t");
        table = q == "st-cores"            ? oracle::st_core_counts(o.s, o.t, o.N)
                : q == "selfconj-st-cores" ? oracle::selfconj_st_core_counts(o.s, o.t, o.N)
                                           : oracle::stbar_core_counts(o.s, o.t, o.N);
    } else if (q == "not-g-cores") {
        need(o.t, "-t");
        need(o.g, "-g");
        table = oracle::not_g_core_counts(o.t, o.g, parse_variant(o.variant), o.N);
    } else if (q == "q-tuples" || q == "q-bar-tuples") {
        need(o.s, "-s");
        need(o.t, "-t");
        need(o.g, "-g");
        table = q == "q-tuples" ? oracle::q_tuple_counts(o.s, o.t, o.g, o.N) : oracle::q_bar_tuple_counts(o.s, o.t, o.g, o.N);
    } else {
        throw std::invalid_argument("unknown quantity: " + q);
    }
    emit(o, o.format == "json" ? table.to_json() + "\n" : table.to_csv(), out);
    return 0;
}

int run_grid(const Options& o, std::ostream& out) {
    need(o.s, "-s");
    need(o.t, "-t");
    if (o.kind == "anderson") {
        emit(o, anderson_grid(o.s, o.t).to_csv(), out);
    } else if (o.kind == "dh") {
        emit(o, dh_grid(o.s, o.t).to_csv(), out);
    } else if (o.kind == "yinyang") {
        emit(o, yinyang_grid(o.s, o.t).to_csv(), out);
    } else {
        throw std::invalid_argument("unknown grid kind: " + o.kind);
    }
    return 0;
}

json apply_map(const Options& o) {
    const auto& m = o.map;
    const auto& in = o.input;
    if (m == "zeta" || m == "zeta-inv" || m == "gks" || m == "gks-inv" || m == "olsson" || m == "olsson-inv") {
        need(o.t, "-t");
        if (m == "zeta") return to_json(zeta(parse_partition(in), o.t));
        if (m == "zeta-inv") return to_json(zeta_inverse(parse_bar(in), o.t));
        if (m == "gks") return tuple_json(o.t, gks_encode(parse_partition(in), o.t).entries());
        if (m == "gks-inv") return to_json(gks_decode(CoreTuple(o.t, parse_parts(in))));
        if (m == "olsson") return tuple_json(o.t, olsson_encode(parse_bar(in), o.t).entries());
        return to_json(olsson_decode(BarTuple(o.t, parse_parts(in))));
    }
    if (m == "quotient" || m == "bar-quotient") {
        need(o.g, "-g");
        if (m == "quotient") return to_json(decompose(parse_partition(in), o.g));
        return to_json(bar_decompose(parse_bar(in), o.g));
    }
    need(o.s, "-s");
    need(o.t, "-t");
    if (m == "gamma") return to_json(gamma(parse_partition(in), o.s, o.t));
    if (m == "gamma-inv") return to_json(gamma_inverse(parse_bar(in), o.s, o.t));
    if (m == "Gamma") return to_json(big_gamma(parse_partition(in), o.s, o.t));
    if (m == "Gamma-inv") return to_json(big_gamma_inverse(parse_bar(in), o.s, o.t));
    if (m == "anderson-path") return to_json(anderson_core_to_path(parse_partition(in), o.s, o.t));
    if (m == "anderson-core") return to_json(anderson_path_to_core(parse_path(in, o.s, o.t), o.s, o.t));
    if (m == "dh-path") return to_json(dh_selfconj_to_path(parse_partition(in), o.s, o.t));
    if (m == "dh-core") return to_json(dh_path_to_selfconj(parse_path(in, o.s / 2, o.t / 2), o.s, o.t));
    if (m == "yinyang-path") return to_json(yy_barcore_to_path(parse_bar(in), o.s, o.t));
    if (m == "yinyang-core") {
        return to_json(yy_path_to_barcore(parse_path(in, (o.s - 1) / 2, (o.t - 1) / 2), o.s, o.t));
    }
    throw std::invalid_argument("unknown map: " + m);
}

int run_scan(const Options& o, std::ostream& out) {
    need(o.modulus, "--mod");
    need(o.g, "-g");
    const auto report = congruence_scan(build_series(o), o.g, o.modulus);
    json j;
    j["modulus"] = report.modulus;
    j["g"] = report.g;
    j["residues"] = report.residues;
    j["verified_to"] = report.verified_to;
    emit(o, j.dump() + "\n", out);
    return 0;
}

int run_verify(const Options& o, std::ostream& out) {
    std::vector<SuiteResult> results;
    if (o.suite == "all") {
        results = run_all(o.N);
    } else {
        results.push_back(run_suite(o.suite, o.N));
    }
    std::string text;
    int checks = 0;
    int passed = 0;
    int suites_passed = 0;
    for (const auto& r : results) {
        for (const auto& c : r.checks) {
            ++checks;
            passed += c.passed;
            text += std::string(c.passed ? "PASS " : "FAIL ") + r.suite + ": " + c.name + " (" + c.detail + ")\n";
        }
        suites_passed += r.passed();
    }
    text += "suites passed: " + std::to_string(suites_passed) + "/" + std::to_string(results.size()) +
            ", checks passed: " + std::to_string(passed) + "/" + std::to_string(checks) + "\n";
    emit(o, text, out);
    return passed == checks ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Simultaneous core partitions: counts, series, grids, bijections, scans and checks"};
    app.require_subcommand(1);
    try {
        o.N = default_truncation();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("-N,--truncation", o.N, "Largest n (default from SIMCORE_TRUNCATION, else 60)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("-o,--output", o.output, "Write to this file instead of stdout");
    };
    const auto add_st = [&](CLI::App* sub) {
        sub->add_option("-s", o.s, "First modulus");
        sub->add_option("-t", o.t, "Second modulus");
    };

    auto* count = app.add_subcommand("count", "Brute-force counts as a table");
    count->add_option("--quantity", o.quantity, "What to count")
        ->required()
        ->check(CLI::IsMember({"cores", "selfconj-cores", "barcores", "st-cores", "selfconj-st-cores", "stbar-cores",
                               "not-g-cores", "q-tuples", "q-bar-tuples", "extremal"}));
    add_st(count);
    count->add_option("-g", o.g, "Common divisor or tuple length");
    count->add_option("--variant", o.variant, "straight, selfconj or bar")
        ->check(CLI::IsMember({"straight", "selfconj", "bar"}));
    count->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_common(count);

    const std::vector<std::string> gfs{"partition", "core", "selfconj-core", "barcore", "psi", "psi-star", "psi-bar"};
    auto* series = app.add_subcommand("series", "Generating function coefficients");
    series->add_option("--gf", o.gf, "Generating function")->required()->check(CLI::IsMember(gfs));
    add_st(series);
    series->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_common(series);

    auto* grid = app.add_subcommand("grid", "Lattice diagram as CSV");
    grid->add_option("--kind", o.kind, "anderson, dh or yinyang")
        ->required()
        ->check(CLI::IsMember({"anderson", "dh", "yinyang"}));
    add_st(grid);
    add_common(grid);

    auto* bijection = app.add_subcommand("bijection", "Apply a map to a JSON partition, tuple or path");
    bijection->add_option("--map", o.map, "Map name")
        ->required()
        ->check(CLI::IsMember({"zeta", "zeta-inv", "gamma", "gamma-inv", "Gamma", "Gamma-inv", "gks", "gks-inv", "olsson",
                               "olsson-inv", "quotient", "bar-quotient", "anderson-path", "anderson-core", "dh-path",
                               "dh-core", "yinyang-path", "yinyang-core"}));
    bijection->add_option("--input", o.input, "JSON input")->required();
    add_st(bijection);
    bijection->add_option("-g", o.g, "Quotient modulus");
    add_common(bijection);

    auto* scan = app.add_subcommand("scan", "Residues r with c(gk+r) divisible by the modulus");
    scan->add_option("--gf", o.gf, "Generating function")->required()->check(CLI::IsMember(gfs));
    add_st(scan);
    scan->add_option("--mod", o.modulus, "Modulus")->required();
    scan->add_option("-g", o.g, "Progression step")->required();
    add_common(scan);

    auto* verify = app.add_subcommand("verify", "Run a named invariant suite, or all of them");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
    add_common(verify);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (count->parsed()) return run_count(o, out);
        if (series->parsed()) {
            emit(o, series_text(o, build_series(o)), out);
            return 0;
        }
        if (grid->parsed()) return run_grid(o, out);
        if (bijection->parsed()) {
            emit(o, apply_map(o).dump() + "\n", out);
            return 0;
        }
        if (scan->parsed()) return run_scan(o, out);
        if (verify->parsed()) return run_verify(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace simcore
