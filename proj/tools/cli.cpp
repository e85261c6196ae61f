// SPDX-License-Identifier: MIT
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "checks.hpp"
#include "padua/analysis.hpp"
#include "padua/cubature.hpp"
#include "padua/error.hpp"
#include "padua/functions.hpp"
#include "padua/interp.hpp"
#include "padua/padua_set.hpp"
#include "padua/parallel.hpp"

namespace padua::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
    int code;
    std::string message;
};

enum class Format { Csv, Json };

struct OutputSpec {
    Format format = Format::Csv;
    std::string path; // empty: standard output
    int precision = 17;
};

double round_to(double v, int precision) {
    if (!std::isfinite(v) || precision >= 17) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return std::strtod(buf, nullptr);
}

std::string format_double(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void write_csv(std::ostream& os, const Table& t, int precision) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            if (const auto* i = std::get_if<long long>(&row[c])) {
                os << *i;
            } else if (const auto* d = std::get_if<double>(&row[c])) {
                os << format_double(*d, precision);
            } else {
                os << std::get<std::string>(row[c]);
            }
        }
        os << '\n';
    }
}

Json number(double v, int precision) { return Json(round_to(v, precision)); }

Json exponent(double p, int precision) { return std::isinf(p) ? Json("inf") : number(p, precision); }

Json to_json(const Table& t, int precision) {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const auto* i = std::get_if<long long>(&row[c])) {
                obj[t.columns[c]] = *i;
            } else if (const auto* d = std::get_if<double>(&row[c])) {
                obj[t.columns[c]] = number(*d, precision);
            } else {
                obj[t.columns[c]] = std::get<std::string>(row[c]);
            }
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

void emit(const OutputSpec& spec, const std::string& text, std::ostream& out) {
    if (spec.path.empty()) {
        out << text;
        out.flush();
        if (!out) throw Failure{kIoError, "failed writing to standard output"};
        return;
    }
    std::ofstream file(spec.path, std::ios::binary);
    if (!file) throw Failure{kIoError, "cannot open output file '" + spec.path + "'"};
    file << text;
    file.flush();
    if (!file) throw Failure{kIoError, "failed writing output file '" + spec.path + "'"};
}

std::string render(const OutputSpec& spec, const Table& table) {
    std::ostringstream os;
    if (spec.format == Format::Csv) {
        write_csv(os, table, spec.precision);
    } else {
        os << to_json(table, spec.precision).dump(2) << '\n';
    }
    return os.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

const TestFunction& resolve_function(const std::string& name) {
    const TestFunction* f = find_builtin(name);
    if (f == nullptr) {
        std::string known;
        for (const TestFunction& g : builtin_functions()) known += (known.empty() ? "" : ", ") + g.name;
        throw Failure{kBadArguments, "unknown function '" + name + "' (builtins: " + known + ")"};
    }
    return *f;
}

double parse_p(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity") return kInfinity;
    std::size_t used = 0;
    double p = 0.0;
    try {
        p = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(p > 0.0)) throw Failure{kBadArguments, "p must be a positive number or 'inf'"};
    return p;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double parse_value(const std::string& text, std::size_t line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw Failure{kDataMismatch, "line " + std::to_string(line) + ": not a number: '" + text + "'"};
    }
    return v;
}

// Header `k,j,value` (any row order, each node once) or a bare column in set order.
SampleVector read_samples(const std::string& path, const PaduaSet& set) {
    std::ifstream file(path);
    if (!file) throw Failure{kIoError, "cannot open sample file '" + path + "'"};
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) {
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    if (file.bad()) throw Failure{kIoError, "failed reading sample file '" + path + "'"};

    SampleVector samples{set.degree(), std::vector<double>(set.size())};
    const std::size_t expected = set.size();
    if (!lines.empty() && lines.front().find(',') != std::string::npos) {
        std::string header = lines.front();
        header.erase(std::remove(header.begin(), header.end(), ' '), header.end());
        if (header != "k,j,value") throw Failure{kDataMismatch, "expected header 'k,j,value'"};
        if (lines.size() - 1 != expected) {
            throw Failure{kDataMismatch, "sample file has " + std::to_string(lines.size() - 1) + " rows, degree " +
                                             std::to_string(set.degree()) + " needs " + std::to_string(expected)};
        }
        std::vector<bool> seen(expected, false);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<std::string> fields;
            std::stringstream ss(lines[i]);
            for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
            if (fields.size() != 3) throw Failure{kDataMismatch, "line " + std::to_string(i + 1) + ": expected 3 fields"};
            const double k = parse_value(fields[0], i + 1), j = parse_value(fields[1], i + 1);
            if (k != std::floor(k) || j != std::floor(j) || k < 0 || k > set.degree() || j < 1 ||
                j > set.column_size(static_cast<int>(k))) {
                throw Failure{kDataMismatch, "line " + std::to_string(i + 1) + ": no node (" + fields[0] + "," +
                                                 fields[1] + ") in degree " + std::to_string(set.degree())};
            }
            const std::size_t pos = set.position(static_cast<int>(k), static_cast<int>(j));
            if (seen[pos]) throw Failure{kDataMismatch, "line " + std::to_string(i + 1) + ": duplicate node"};
            seen[pos] = true;
            samples.values[pos] = parse_value(fields[2], i + 1);
        }
        return samples;
    }
    if (lines.size() != expected) {
        throw Failure{kDataMismatch, "sample file has " + std::to_string(lines.size()) + " values, degree " +
                                         std::to_string(set.degree()) + " needs " + std::to_string(expected)};
    }
    for (std::size_t i = 0; i < lines.size(); ++i) samples.values[i] = parse_value(lines[i], i + 1);
    return samples;
}

void require_increasing(const std::vector<int>& degrees) {
    if (degrees.empty()) throw Failure{kBadArguments, "degree list is empty"};
    for (int n : degrees) check_degree(n);
    for (std::size_t i = 1; i < degrees.size(); ++i) {
        if (degrees[i] <= degrees[i - 1]) throw Failure{kBadArguments, "degrees must be strictly increasing"};
    }
}

struct Options {
    OutputSpec output;
    int degree = 0;
    std::vector<int> degrees;
    std::string function;
    std::string samples_path;
    int grid = 100;
    GridSpacing spacing = GridSpacing::Uniform;
    KernelMethod method = KernelMethod::Auto;
    std::string p = "2";
    int trials = 200;
    std::uint64_t seed = 0;
    double tamper_vertex = 2.0;
    std::string format_name = "csv";
    std::string spacing_name = "uniform";
    std::string method_name = "auto";
};

int cmd_points(const Options& o, std::ostream& out) {
    const PaduaSet set = generate(o.degree);
    Table t{{"k", "j", "x1", "x2", "class"}, {}};
    for (const PaduaPoint& p : set.points()) {
        t.rows.push_back({p.k, p.j, p.x.x1, p.x.x2, std::string(to_string(p.cls))});
    }
    emit(o.output, render(o.output, t), out);
    return kOk;
}

int cmd_interp(const Options& o, std::ostream& out, std::ostream& err) {
    const PaduaSet set = generate(o.degree);
    const double p = parse_p(o.p);
    if (o.function.empty() && o.samples_path.empty()) {
        throw Failure{kBadArguments, "one of --function or --samples is required"};
    }
    const TestFunction* truth = o.function.empty() ? nullptr : &resolve_function(o.function);
    const SampleVector samples = o.samples_path.empty() ? sample(set, truth->evaluate) : read_samples(o.samples_path, set);
    const EvalGrid grid(o.grid, o.spacing);
    const GridValues values = interpolate_grid(set, samples, grid, o.method);

    Table t{{"i", "j", "x1", "x2", "value"}, {}};
    if (truth) t.columns.push_back("error");
    double error_uniform = 0.0;
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        const Point x = grid.node(flat);
        const auto m = static_cast<std::size_t>(grid.m());
        std::vector<Cell> row{static_cast<long long>(flat / m), static_cast<long long>(flat % m), x.x1, x.x2,
                              values.values[flat]};
        if (truth) {
            const double e = std::abs(values.values[flat] - truth->evaluate(x));
            error_uniform = std::max(error_uniform, e);
            row.emplace_back(e);
        }
        t.rows.push_back(std::move(row));
    }

    std::optional<double> error_wp;
    if (truth) {
        const LagrangeBasis basis(set, o.method);
        const ScalarFunction diff = [&](const Point& x) {
            return interpolate(basis, samples.values, x) - truth->evaluate(x);
        };
        error_wp = lp_norm(diff, p, std::max(16, 4 * o.degree));
    }

    const int prec = o.output.precision;
    if (o.output.format == Format::Json) {
        Json j;
        j["degree"] = o.degree;
        j["function"] = truth ? Json(truth->name) : Json(nullptr);
        j["samples"] = o.samples_path.empty() ? Json(nullptr) : Json(o.samples_path);
        j["grid"] = o.grid;
        j["spacing"] = std::string(to_string(o.spacing));
        j["p"] = exponent(p, prec);
        Json summary = Json::object();
        if (truth) {
            summary["error_uniform"] = number(error_uniform, prec);
            summary["error_wp"] = number(*error_wp, prec);
        }
        j["summary"] = summary;
        j["values"] = to_json(t, prec);
        emit(o.output, render_json(j), out);
    } else {
        emit(o.output, render(o.output, t), out);
        if (truth) {
            err << "summary: function=" << truth->name << " degree=" << o.degree << " p=" << format_double(p, prec)
                << " error_uniform=" << format_double(error_uniform, prec)
                << " error_wp=" << format_double(*error_wp, prec) << '\n';
        }
    }
    return kOk;
}

int cmd_cubature(const Options& o, std::ostream& out) {
    const CubatureRule rule = build_rule(generate(o.degree));
    const int prec = o.output.precision;
    if (o.function.empty()) {
        Table t{{"k", "j", "x1", "x2", "class", "weight"}, {}};
        for (std::size_t i = 0; i < rule.weights.size(); ++i) {
            const PaduaPoint& p = rule.nodes[i];
            t.rows.push_back({p.k, p.j, p.x.x1, p.x.x2, std::string(to_string(p.cls)), rule.weights[i]});
        }
        emit(o.output, render(o.output, t), out);
        return kOk;
    }
    const TestFunction& f = resolve_function(o.function);
    const double value = integrate(rule, f.evaluate);
    if (o.output.format == Format::Json) {
        Json j;
        j["function"] = f.name;
        j["degree"] = o.degree;
        j["integral"] = number(value, prec);
        emit(o.output, render_json(j), out);
    } else {
        emit(o.output, render(o.output, Table{{"function", "degree", "integral"}, {{f.name, o.degree, value}}}), out);
    }
    return kOk;
}

int cmd_lebesgue(const Options& o, std::ostream& out) {
    require_increasing(o.degrees);
    const EvalGrid grid(o.grid, o.spacing);
    Table t{{"n", "nodes", "lebesgue", "argmax_x1", "argmax_x2", "ratio_log2"}, {}};
    for (int n : o.degrees) {
        const LebesgueEstimate est = lebesgue_constant(generate(n), grid, o.method);
        const double log_term = std::log(n + 1.0);
        t.rows.push_back({n, static_cast<long long>(PaduaSet::cardinality(n)), est.value, est.argmax.x1,
                          est.argmax.x2, est.value / (log_term * log_term)});
    }
    emit(o.output, render(o.output, t), out);
    return kOk;
}

int cmd_converge(const Options& o, std::ostream& out, std::ostream& err) {
    require_increasing(o.degrees);
    const TestFunction& f = resolve_function(o.function);
    const double p = parse_p(o.p);
    const ConvergenceReport r = convergence_study(f, p, o.degrees, EvalGrid(o.grid, o.spacing), o.method);
    Table t{{"n", "nodes", "error_wp", "error_uniform", "lebesgue_estimate", "en_proxy", "ratio_wp_proxy"}, {}};
    for (const ConvergenceRow& row : r.rows) {
        t.rows.push_back({row.n, static_cast<long long>(row.nodes), row.error_wp, row.error_uniform,
                          row.lebesgue_estimate, row.en_proxy, row.error_wp / row.en_proxy});
    }
    const int prec = o.output.precision;
    if (o.output.format == Format::Json) {
        Json j;
        j["function"] = r.function;
        j["p"] = exponent(r.p, prec);
        j["grid"] = r.grid_m;
        j["spacing"] = std::string(to_string(r.spacing));
        j["quadrature_m"] = r.quadrature_m;
        j["en_proxy"] = "uniform error of the degree-n Fourier partial sum on the grid";
        j["rows"] = to_json(t, prec);
        emit(o.output, render_json(j), out);
    } else {
        emit(o.output, render(o.output, t), out);
        err << "summary: function=" << r.function << " p=" << format_double(r.p, prec) << " grid=" << r.grid_m
            << " spacing=" << to_string(r.spacing) << " quadrature_m=" << r.quadrature_m << '\n';
    }
    return kOk;
}

int cmd_marcinkiewicz(const Options& o, std::ostream& out, std::ostream& err) {
    require_increasing(o.degrees);
    const double p = parse_p(o.p);
    if (!std::isfinite(p) || p < 1.0) throw Failure{kBadArguments, "marcinkiewicz needs 1 <= p < inf"};
    if (o.trials < 1) throw Failure{kBadArguments, "trials must be >= 1"};
    std::vector<MarcinkiewiczResult> results;
    for (int n : o.degrees) results.push_back(marcinkiewicz_ratios(n, p, o.trials, o.seed));

    const int prec = o.output.precision;
    if (o.output.format == Format::Json) {
        Json j;
        j["p"] = exponent(p, prec);
        j["trials"] = o.trials;
        j["seed"] = o.seed;
        Json arr = Json::array();
        for (const MarcinkiewiczResult& r : results) {
            Json e;
            e["degree"] = r.degree;
            e["min_ratio"] = number(r.min_ratio, prec);
            e["max_ratio"] = number(r.max_ratio, prec);
            Json ratios = Json::array();
            for (double v : r.ratios) ratios.push_back(number(v, prec));
            e["ratios"] = std::move(ratios);
            arr.push_back(std::move(e));
        }
        j["results"] = std::move(arr);
        emit(o.output, render_json(j), out);
        return kOk;
    }
    Table t{{"degree", "trial", "ratio"}, {}};
    for (const MarcinkiewiczResult& r : results) {
        for (std::size_t i = 0; i < r.ratios.size(); ++i) t.rows.push_back({r.degree, static_cast<long long>(i), r.ratios[i]});
    }
    emit(o.output, render(o.output, t), out);
    for (const MarcinkiewiczResult& r : results) {
        err << "summary: degree=" << r.degree << " p=" << format_double(p, prec) << " seed=" << o.seed
            << " min_ratio=" << format_double(r.min_ratio, prec) << " max_ratio=" << format_double(r.max_ratio, prec)
            << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    checks::VerifyOptions vo;
    vo.max_degree = o.degree;
    vo.seed = o.seed;
    vo.factors.vertex = o.tamper_vertex;
    const checks::VerifyReport report = checks::run_verify(vo);
    const int prec = o.output.precision;

    std::vector<std::string> failed;
    for (const checks::CheckResult& c : report.checks) {
        if (!c.pass()) failed.push_back(c.name);
    }
    if (o.output.format == Format::Json) {
        Json j;
        j["max_degree"] = report.max_degree;
        j["seed"] = report.seed;
        j["pass"] = report.pass();
        j["failed_checks"] = failed;
        Json arr = Json::array();
        for (const checks::CheckResult& c : report.checks) {
            Json e;
            e["name"] = c.name;
            e["tolerance"] = c.tolerance_rule;
            e["pass"] = c.pass();
            e["max_observed"] = number(c.max_observed(), prec);
            Json rows = Json::array();
            for (const checks::DegreeResult& d : c.degrees) {
                rows.push_back(Json{{"degree", d.degree},
                                    {"observed", number(d.observed, prec)},
                                    {"tolerance", number(d.tolerance, prec)},
                                    {"pass", d.pass()}});
            }
            e["per_degree"] = std::move(rows);
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        emit(o.output, render_json(j), out);
    } else {
        Table t{{"check", "degree", "observed", "tolerance", "pass"}, {}};
        for (const checks::CheckResult& c : report.checks) {
            for (const checks::DegreeResult& d : c.degrees) {
                t.rows.push_back({c.name, d.degree, d.observed, d.tolerance, std::string(d.pass() ? "true" : "false")});
            }
        }
        emit(o.output, render(o.output, t), out);
    }
    if (failed.empty()) return kOk;
    err << "verify: failed checks:";
    for (const std::string& name : failed) err << ' ' << name;
    err << '\n';
    return kCheckFailed;
}

constexpr const char* kFooter = R"(Exit codes:
  0  success
  1  a verification check failed (the report is still written)
  2  invalid arguments (unknown function, unsupported degree, bad option)
  3  I/O failure (output or sample file)
  4  data mismatch (sample file length, header or values)

Environment:
  PADUA_THREADS  maximum number of worker threads)";

void add_output_options(CLI::App* sub, Options& o, const char* default_format) {
    o.format_name = default_format;
    sub->add_option("--format", o.format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", o.output.path, "write to this file instead of standard output");
    sub->add_option("--precision", o.output.precision, "significant digits for numbers (1-17)")
        ->check(CLI::Range(1, 17));
}

void add_grid_options(CLI::App* sub, Options& o, int default_m) {
    o.grid = default_m;
    sub->add_option("--grid", o.grid, "evaluation grid size per axis")->check(CLI::Range(2, 100000));
    sub->add_option("--spacing", o.spacing_name, "uniform or chebyshev")
        ->check(CLI::IsMember({"uniform", "chebyshev"}));
}

void add_method_option(CLI::App* sub, Options& o) {
    sub->add_option("--method", o.method_name, "kernel evaluation: auto, direct or compact")
        ->check(CLI::IsMember({"auto", "direct", "compact"}));
}

// Converts the string-valued choices once parsing succeeded.
void resolve_choices(Options& o) {
    o.output.format = o.format_name == "json" ? Format::Json : Format::Csv;
    o.spacing = o.spacing_name == "chebyshev" ? GridSpacing::ChebyshevGauss : GridSpacing::Uniform;
    o.method = o.method_name == "direct"    ? KernelMethod::Direct
               : o.method_name == "compact" ? KernelMethod::Compact
                                            : KernelMethod::Auto;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env();

    CLI::App app{"Padua points: generation, interpolation, cubature and convergence studies", "padua"};
    app.footer(kFooter);
    app.require_subcommand(1);
    std::map<std::string, Options> options; // one per subcommand, so defaults stay independent
    const auto add = [&](const std::string& name, const std::string& description) {
        return std::pair<CLI::App*, Options*>{app.add_subcommand(name, description), &options[name]};
    };

    {
        auto [sub, o] = add("points", "list the Padua points of a degree");
        sub->add_option("--degree,-n", o->degree, "degree n >= 1")->required();
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("interp", "interpolate a function or sample file on a grid");
        sub->add_option("--degree,-n", o->degree, "degree n >= 1")->required();
        sub->add_option("--function,-f", o->function, "builtin test function");
        sub->add_option("--samples", o->samples_path, "CSV of node values: header k,j,value or one value per line");
        sub->add_option("--p", o->p, "exponent for the weighted error (number or inf)");
        add_grid_options(sub, *o, 100);
        add_method_option(sub, *o);
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("cubature", "nodes and weights, or the integral of a function");
        sub->add_option("--degree,-n", o->degree, "degree n >= 1")->required();
        sub->add_option("--function,-f", o->function, "builtin test function to integrate");
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("lebesgue", "grid estimates of the Lebesgue constant");
        sub->add_option("--degrees", o->degrees, "comma-separated increasing degrees")->delimiter(',')->required();
        add_grid_options(sub, *o, 200);
        add_method_option(sub, *o);
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("converge", "weighted Lp interpolation error over degrees");
        sub->add_option("--function,-f", o->function, "builtin test function")->required();
        sub->add_option("--p", o->p, "exponent (number or inf)");
        sub->add_option("--degrees", o->degrees, "comma-separated increasing degrees")->delimiter(',')->required();
        add_grid_options(sub, *o, 200);
        add_method_option(sub, *o);
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("marcinkiewicz", "discrete vs continuous Lp norms of random polynomials");
        sub->add_option("--degree,--degrees,-n", o->degrees, "degree or comma-separated increasing degrees")
            ->delimiter(',')
            ->required();
        sub->add_option("--p", o->p, "exponent, 1 <= p < inf");
        sub->add_option("--trials", o->trials, "random polynomials per degree");
        sub->add_option("--seed", o->seed, "random seed");
        add_output_options(sub, *o, "csv");
    }
    {
        auto [sub, o] = add("verify", "run the consistency checks for degrees 1..max");
        sub->add_option("--max-degree", o->degree, "largest degree checked")->required();
        sub->add_option("--seed", o->seed, "random seed for sampled checks");
        sub->add_option("--tamper-vertex-factor", o->tamper_vertex)->group("");
        add_output_options(sub, *o, "json");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kBadArguments;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        Options& o = options.at(name);
        resolve_choices(o);
        if (name == "points") return cmd_points(o, out);
        if (name == "interp") return cmd_interp(o, out, err);
        if (name == "cubature") return cmd_cubature(o, out);
        if (name == "lebesgue") return cmd_lebesgue(o, out);
        if (name == "converge") return cmd_converge(o, out, err);
        if (name == "marcinkiewicz") return cmd_marcinkiewicz(o, out, err);
        if (name == "verify") return cmd_verify(o, out, err);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::Length ? kDataMismatch : kBadArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }
    return kBadArguments;
}

} // namespace padua::cli
