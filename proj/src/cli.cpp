#include "ctrans/cli.hpp"

#include "ctrans/ctransform.hpp"
#include "ctrans/families.hpp"
#include "ctrans/hankel.hpp"
#include "ctrans/oeis.hpp"
#include "ctrans/series_expr.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctrans::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string label;
    std::optional<IntSequence> sequence;
    std::optional<std::string> gf;
};

bool looks_like_list(const std::string& s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return false;
    if (s[first] == '[') return true;
    return s.find(',') != std::string::npos && s.find_first_not_of("0123456789+-, \t\r\n") == std::string::npos;
}

Input read_input(const std::string& arg) {
    Input in;
    in.label = arg;
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        std::ostringstream os;
        os << f.rdbuf();
        in.sequence = IntSequence::parse(os.str());
    } else if (looks_like_list(arg)) {
        in.sequence = IntSequence::parse(arg);
    } else {
        in.gf = arg;
    }
    if (in.sequence && in.sequence->size() == 0) throw InsufficientTerms("input sequence is empty");
    return in;
}

PowerSeries as_series(const Input& in, int order) {
    if (in.sequence) return in.sequence->to_series();
    return expand(*in.gf, order);
}

std::string timestamp_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json strings(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

class Emitter {
public:
    Emitter(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void object(json j) {
        if (cfg_.timestamp) j["generated_at"] = timestamp_now();
        out_ << j.dump() << '\n';
    }

    void terms(const std::string& command, const std::string& input, const std::vector<Rational>& v, json extra = {}) {
        if (cfg_.output_format == "csv") {
            for (const auto& r : v) out_ << to_string(r) << '\n';
        } else if (cfg_.output_format == "text") {
            for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? ", " : "") << to_string(v[i]);
            out_ << '\n';
        } else {
            json j = {{"command", command}, {"input", input}, {"terms", strings(v)}};
            if (extra.is_object())
                for (auto& [k, val] : extra.items()) j[k] = val;
            object(j);
        }
    }

private:
    const CliConfig& cfg_;
    std::ostream& out_;
};

std::vector<Rational> all_terms(const PowerSeries& s) { return s.coeffs(); }

std::vector<Rational> rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_rational(item));
    return out;
}

}  // namespace

CliConfig config_from_environment() {
    CliConfig cfg;
    if (const char* o = std::getenv("CTRANS_ORDER")) {
        try {
            cfg.order = std::stoi(o);
        } catch (const std::exception&) {
            cfg.order = -1;
        }
    }
    if (const char* d = std::getenv("CTRANS_CACHE_DIR")) {
        cfg.cache_dir = d;
    } else if (const char* home = std::getenv("HOME")) {
        cfg.cache_dir = (fs::path(home) / ".cache" / "ctrans" / "oeis").string();
    } else {
        cfg.cache_dir = ".ctrans-cache";
    }
    return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, config_from_environment(), out, err);
}

int run(const std::vector<std::string>& args, const CliConfig& defaults, std::ostream& out, std::ostream& err) {
    CliConfig cfg = defaults;
    bool no_timestamp = false;

    CLI::App app{"Exact C transform, Riordan array and Hankel transform toolkit", "ctrans"};
    app.require_subcommand(1);
    app.add_option("--order", cfg.order, "Truncation order for series")->check(CLI::Range(2, 100000));
    app.add_option("--format", cfg.output_format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--strict", cfg.strict, "Exit with status 5 when any verification fails");
    app.add_flag("--no-timestamp", no_timestamp, "Omit generated_at from JSON output");
    app.add_option("--oeis-mode", cfg.oeis_mode, "OEIS access")->check(CLI::IsMember({"offline", "online"}));
    app.add_option("--cache-dir", cfg.cache_dir, "OEIS response cache directory");

    std::string input_arg, route = "closed", section, table_id, linear, quadratic;
    int count = kHankelPrefix, num_deg = kFitMaxDegree, den_deg = kFitMaxDegree, prefix = kHankelPrefix, max_r = 6;
    std::optional<long> a, b, r, s;
    long grid_lo = -3, grid_hi = 3;
    bool serial = false;

    auto* expand_cmd = app.add_subcommand("expand", "Expand a generating function");
    expand_cmd->add_option("gf", input_arg, "Generating function, e.g. 1/(1-x)")->required();

    auto* ct_cmd = app.add_subcommand("ctransform", "C transform of a GF or sequence");
    ct_cmd->add_option("input", input_arg, "GF string, sequence file or comma separated terms")->required();
    ct_cmd->add_option("--route", route, "Evaluation route")
        ->check(CLI::IsMember({"closed", "constructive", "sequence", "catalan-squared", "catalan-matrix"}));

    auto* ci_cmd = app.add_subcommand("cinverse", "Inverse C transform of a GF or sequence");
    ci_cmd->add_option("input", input_arg, "GF string, sequence file or comma separated terms")->required();

    auto* hk_cmd = app.add_subcommand("hankel", "Hankel transform");
    hk_cmd->add_option("input", input_arg, "GF string, sequence file or comma separated terms")->required();
    hk_cmd->add_option("--count", count, "Number of Hankel determinants")->check(CLI::PositiveNumber);
    hk_cmd->add_flag("--serial", serial, "Use the serial determinant loop");

    auto* fit_cmd = app.add_subcommand("fitgf", "Fit a rational generating function");
    fit_cmd->add_option("input", input_arg, "GF string, sequence file or comma separated terms")->required();
    fit_cmd->add_option("--num-deg", num_deg, "Maximum numerator degree")->check(CLI::NonNegativeNumber);
    fit_cmd->add_option("--den-deg", den_deg, "Maximum denominator degree")->check(CLI::NonNegativeNumber);

    auto* jf_cmd = app.add_subcommand("jfrac", "Expand a J-fraction");
    jf_cmd->add_option("--linear", linear, "b0,b1,... coefficients of x")->required();
    jf_cmd->add_option("--quadratic", quadratic, "a1,a2,... coefficients of x^2 (none at depth 1)");

    auto* vf_cmd = app.add_subcommand("verify", "Verify a group of claims");
    vf_cmd->add_option("section", section, "Claim group id")->required()->check(CLI::IsMember(section_ids()));
    vf_cmd->add_option("--a", a, "Parameter a");
    vf_cmd->add_option("--b", b, "Parameter b");
    vf_cmd->add_option("--r", r, "Parameter r");
    vf_cmd->add_option("--s", s, "Parameter s");
    vf_cmd->add_option("--prefix", prefix, "Hankel prefix length")->check(CLI::Range(1, 1000));
    vf_cmd->add_option("--grid-lo", grid_lo, "Lower grid bound");
    vf_cmd->add_option("--grid-hi", grid_hi, "Upper grid bound");
    vf_cmd->add_flag("--serial", serial, "Sweep grid cells serially");

    auto* tb_cmd = app.add_subcommand("table", "Reproduce a table: 4, 9 or 11");
    tb_cmd->add_option("id", table_id, "Table id")->required()->check(CLI::IsMember({"4", "9", "11"}));
    tb_cmd->add_option("--prefix", prefix, "Number of terms shown")->check(CLI::Range(1, 1000));
    tb_cmd->add_option("--max-r", max_r, "Largest r for table 9")->check(CLI::Range(1, 40));

    auto* id_cmd = app.add_subcommand("identify", "Look up a sequence in the OEIS");
    id_cmd->add_option("input", input_arg, "GF string, sequence file or comma separated terms")->required();
    id_cmd->add_option("--count", count, "Number of terms sent")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (cfg.order < 2) {
        err << "error: order must be at least 2\n";
        return kExitUsage;
    }
    cfg.timestamp = !no_timestamp;
    Emitter emit(cfg, out);

    try {
        if (expand_cmd->parsed()) {
            emit.terms("expand", input_arg, all_terms(expand(input_arg, cfg.order)), {{"order", cfg.order}});
        } else if (ct_cmd->parsed()) {
            Input in = read_input(input_arg);
            PowerSeries g = as_series(in, cfg.order);
            std::vector<Rational> v;
            if (route == "closed") v = all_terms(c_transform(g));
            else if (route == "constructive") v = rationals(c_transform_constructive(g).terms);
            else if (route == "sequence") v = rationals(c_transform_sequence(IntSequence::from_series(g)).terms);
            else if (route == "catalan-squared") v = all_terms(c_transform_catalan_squared(g));
            else v = all_terms(c_transform_catalan_matrix(g));
            emit.terms("ctransform", input_arg, v, {{"route", route}, {"order", g.order()}});
        } else if (ci_cmd->parsed()) {
            Input in = read_input(input_arg);
            PowerSeries h = as_series(in, cfg.order);
            emit.terms("cinverse", input_arg, all_terms(c_inverse(h)), {{"order", h.order()}});
        } else if (hk_cmd->parsed()) {
            Input in = read_input(input_arg);
            std::vector<Rational> v;
            if (in.sequence && serial) {
                v = rationals(hankel_transform_serial(*in.sequence, count).terms);
            } else if (in.sequence) {
                v = rationals(hankel_transform(*in.sequence, count).terms);
            } else {
                PowerSeries sr = expand(*in.gf, 2 * count - 2);
                v = hankel_transform(sr.coeffs(), count);
            }
            emit.terms("hankel", input_arg, v, {{"count", count}});
        } else if (fit_cmd->parsed()) {
            Input in = read_input(input_arg);
            std::vector<Rational> terms = as_series(in, cfg.order).coeffs();
            FitResult fit = fit_rational_gf(terms, num_deg, den_deg);
            if (cfg.output_format == "json") {
                json j = {{"command", "fitgf"},
                          {"input", input_arg},
                          {"terms", static_cast<int>(terms.size())},
                          {"holdout", fit.holdout},
                          {"underdetermined", fit.underdetermined}};
                if (fit.gf) {
                    j["gf"] = fit.gf->to_text();
                    j["numerator"] = strings(fit.gf->numerator());
                    j["denominator"] = strings(fit.gf->denominator());
                } else {
                    j["gf"] = nullptr;
                }
                emit.object(j);
            } else if (cfg.output_format == "csv") {
                out << "gf,holdout,underdetermined\n"
                    << '"' << (fit.gf ? fit.gf->to_text() : "") << "\"," << fit.holdout << ','
                    << (fit.underdetermined ? "true" : "false") << '\n';
            } else {
                out << (fit.gf ? fit.gf->to_text() : "no rational fit within the degree bounds") << '\n';
            }
        } else if (jf_cmd->parsed()) {
            JFraction j{rational_list(linear), rational_list(quadratic)};
            if (j.linear.empty() || j.quadratic.size() + 1 != j.linear.size())
                throw UsageError("--quadratic needs exactly one fewer coefficient than --linear");
            if (cfg.order >= j.determined_terms())
                err << "warning: terms from index " << j.determined_terms() << " depend on truncation depth\n";
            emit.terms("jfrac", linear + " / " + quadratic, all_terms(jfraction_expand(j, cfg.order)),
                       {{"order", cfg.order}, {"depth", j.depth()}});
        } else if (vf_cmd->parsed()) {
            SectionOptions o;
            o.a = a;
            o.b = b;
            o.r = r;
            o.s = s;
            o.prefix = prefix;
            o.grid_lo = grid_lo;
            o.grid_hi = grid_hi;
            o.parallel = !serial;
            if (grid_lo > grid_hi) throw UsageError("--grid-lo exceeds --grid-hi");
            Reports reports = run_section(section, o);
            std::size_t failed = count_failures(reports);
            if (cfg.output_format == "text") {
                out << reports_to_text(reports);
            } else if (cfg.output_format == "csv") {
                out << reports_to_csv(reports);
            } else {
                out << reports_to_jsonl(reports);
                emit.object({{"summary",
                              {{"section", section},
                               {"total", reports.size()},
                               {"passed", reports.size() - failed},
                               {"failed", failed}}}});
            }
            if (cfg.strict && failed > 0) return kExitVerification;
        } else if (tb_cmd->parsed()) {
            Table t = table_id == "4" ? simple_transform_table(prefix)
                      : table_id == "9" ? aerated_table(max_r, prefix)
                                        : tree_table(prefix);
            if (cfg.output_format == "text") out << t.to_text();
            else if (cfg.output_format == "csv") out << t.to_csv();
            else emit.object(t.to_json());
        } else if (id_cmd->parsed()) {
            Input in = read_input(input_arg);
            IntSequence seq = in.sequence ? *in.sequence : IntSequence::from_series(expand(*in.gf, cfg.order));
            if (id_cmd->count("--count") && static_cast<std::size_t>(count) < seq.size()) seq = seq.prefix(count);
            OeisClient client(cfg.oeis_mode == "online" ? OeisMode::Online : OeisMode::Offline, cfg.cache_dir);
            OeisResult res = client.lookup(seq);
            if (cfg.output_format == "json") {
                emit.object(res.to_json());
            } else if (cfg.output_format == "csv") {
                out << "id,name\n";
                for (const auto& m : res.matches) out << m.id << ",\"" << m.name << "\"\n";
            } else if (res.identified()) {
                for (const auto& m : res.matches) out << m.id << ' ' << m.name << '\n';
            } else {
                out << "unidentified (" << res.message << ")\n";
            }
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << '\n';
        return kExitMath;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace ctrans::cli
