#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcore/asymptotics.hpp"
#include "tcore/core_tower.hpp"
#include "tcore/genfun.hpp"
#include "tcore/partition.hpp"
#include "tcore/serialize.hpp"

namespace tcore::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { plain, json, csv };

struct CliConfig {
    int order = 100;
    int t = 0;
    std::optional<int> j;
    Format format = Format::plain;
    unsigned precision = kDefaultDigits;
    int brute_ceiling = 30;
    unsigned threads = 1;
};

unsigned precision_from_env() {
    const char* raw = std::getenv(kPrecisionEnv);
    if (!raw || !*raw) return kDefaultDigits;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 1 || value > 100000)
        throw UsageError(std::string(kPrecisionEnv) + " must be a positive integer, got '" + raw + "'");
    return static_cast<unsigned>(value);
}

std::string show(const Partition& lambda) { return lambda.empty() ? "∅" : to_comma_list(lambda); }

json parts_json(const Partition& lambda) { return json(lambda.parts()); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void require_modulus(int t) {
    if (t < 2) throw UsageError("--t must be at least 2");
}

void require_level(const std::optional<int>& j) {
    if (j && *j < 0) throw UsageError("--j must be nonnegative");
}

void require_order(int order) {
    if (order < 0) throw UsageError("--order must be nonnegative");
}

std::string report_line(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity_name << " t=" << r.t;
    if (r.j) os << " j=" << *r.j;
    os << " order=" << r.order_checked << ": ";
    if (r.passed()) {
        os << "pass";
    } else {
        const auto& m = *r.first_mismatch;
        os << "fail at n=" << m.n << " (closed " << m.closed_value << ", brute " << m.brute_value << ")";
    }
    return os.str();
}

std::string report_csv(const VerificationReport& r) {
    std::string out = "identity,t,j,order_checked,status,n,closed,brute\n";
    out += r.identity_name + "," + std::to_string(r.t) + "," + (r.j ? std::to_string(*r.j) : "") + "," +
           std::to_string(r.order_checked) + "," + (r.passed() ? "pass" : "fail") + ",";
    if (r.first_mismatch)
        out += std::to_string(r.first_mismatch->n) + "," + r.first_mismatch->closed_value.str() + "," +
               r.first_mismatch->brute_value.str();
    else
        out += ",,";
    return out + "\n";
}

std::string coefficient_list(const IntSeries& s) {
    std::string out;
    for (int n = 0; n <= s.order(); ++n) {
        if (n) out += ",";
        out += s[static_cast<std::size_t>(n)].str();
    }
    return out;
}

// --- subcommands ---

int do_core(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    require_modulus(cfg.t);
    const Partition lambda = parse_partition(text);
    const Partition core = t_core(lambda, cfg.t);
    switch (cfg.format) {
        case Format::json:
            out << json{{"t", cfg.t}, {"partition", parts_json(lambda)}, {"core", parts_json(core)}}.dump(2) << "\n";
            break;
        case Format::csv:
            out << "t,partition,core\n" << cfg.t << "," << quoted(to_comma_list(lambda)) << ","
                << quoted(to_comma_list(core)) << "\n";
            break;
        case Format::plain:
            out << show(core) << "\n";
    }
    return kPass;
}

int do_quotient(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    require_modulus(cfg.t);
    const Partition lambda = parse_partition(text);
    const auto quotient = t_quotient(lambda, cfg.t);
    switch (cfg.format) {
        case Format::json: {
            json comps = json::array();
            for (const auto& q : quotient) comps.push_back(parts_json(q));
            out << json{{"t", cfg.t}, {"partition", parts_json(lambda)}, {"quotient", comps}}.dump(2) << "\n";
            break;
        }
        case Format::csv:
            out << "runner,component\n";
            for (std::size_t r = 0; r < quotient.size(); ++r) out << r << "," << quoted(to_comma_list(quotient[r])) << "\n";
            break;
        case Format::plain:
            for (std::size_t r = 0; r < quotient.size(); ++r) out << r << ": " << show(quotient[r]) << "\n";
    }
    return kPass;
}

int do_tower(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    require_modulus(cfg.t);
    const Partition lambda = parse_partition(text);
    const CoreTower tower = core_tower(lambda, cfg.t);
    const int d = defect(lambda, cfg.t);
    switch (cfg.format) {
        case Format::json: {
            json rows = json::array();
            for (std::size_t j = 0; j <= tower.height(); ++j) {
                json cores = json::array();
                for (const auto& c : tower.row(j)) cores.push_back(parts_json(c));
                rows.push_back({{"j", j}, {"cores", cores}, {"size", tower.row_size(j)}});
            }
            out << json{{"t", cfg.t}, {"partition", parts_json(lambda)}, {"rows", rows}, {"defect", d}}.dump(2)
                << "\n";
            break;
        }
        case Format::csv:
            out << "j,index,core,row_size\n";
            for (std::size_t j = 0; j <= tower.height(); ++j)
                for (std::size_t i = 0; i < tower.row(j).size(); ++i)
                    out << j << "," << i << "," << quoted(to_comma_list(tower.row(j)[i])) << "," << tower.row_size(j)
                        << "\n";
            break;
        case Format::plain:
            out << "t=" << cfg.t << " partition " << to_string(lambda) << "\n";
            for (std::size_t j = 0; j <= tower.height(); ++j) {
                out << "row " << j << ": [";
                for (std::size_t i = 0; i < tower.row(j).size(); ++i) out << (i ? "," : "") << to_string(tower.row(j)[i]);
                out << "] size " << tower.row_size(j) << "\n";
            }
            out << "defect " << d << "\n";
    }
    return kPass;
}

int do_series(const CliConfig& cfg, const std::string& kind, const std::string& mode, std::ostream& out) {
    require_modulus(cfg.t);
    require_level(cfg.j);
    require_order(cfg.order);
    if (kind == "D" && cfg.j) throw UsageError("series D takes no --j");
    const bool want_closed = mode != "brute";
    const bool want_brute = mode != "closed";
    if (want_brute && cfg.order > cfg.brute_ceiling)
        throw UsageError("--order " + std::to_string(cfg.order) + " exceeds the brute-force ceiling " +
                         std::to_string(cfg.brute_ceiling) + " (raise it with --brute-ceiling)");

    const int j = cfg.j.value_or(0);
    const BruteOptions opts{cfg.threads};
    std::optional<IntSeries> closed, brute;
    if (kind == "T") {
        if (want_closed) closed = tower_series_closed(j, cfg.t, cfg.order);
        if (want_brute) brute = tower_series_brute(j, cfg.t, cfg.order, opts);
    } else if (kind == "D") {
        if (want_closed) closed = defect_series_closed(cfg.t, cfg.order);
        if (want_brute) brute = defect_series_brute(cfg.t, cfg.order, opts);
    } else {
        if (want_closed) closed = generalized_core_series_closed(j, cfg.t, cfg.order);
        if (want_brute) brute = generalized_core_series_brute(j, cfg.t, cfg.order, opts);
    }
    const std::optional<int> shown_j = kind == "D" ? std::nullopt : std::optional<int>(j);
    std::optional<VerificationReport> report;
    if (closed && brute) report = compare_series(kind, cfg.t, shown_j, *closed, *brute);
    const IntSeries& series = closed ? *closed : *brute;

    switch (cfg.format) {
        case Format::json: {
            json doc = to_json(series);
            doc["series"] = kind;
            doc["t"] = cfg.t;
            doc["j"] = shown_j ? json(*shown_j) : json(nullptr);
            doc["mode"] = mode;
            if (report) doc["report"] = to_json(*report);
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            if (report) {
                out << "n,closed,brute\n";
                for (int n = 0; n <= cfg.order; ++n)
                    out << n << "," << (*closed)[static_cast<std::size_t>(n)] << "," << (*brute)[static_cast<std::size_t>(n)]
                        << "\n";
            } else {
                out << to_csv(series);
            }
            break;
        case Format::plain:
            if (report) out << report_line(*report) << "\n";
            out << coefficient_list(series) << "\n";
    }
    return !report || report->passed() ? kPass : kMismatch;
}

int do_verify(const CliConfig& cfg, const std::string& kind, std::ostream& out) {
    require_modulus(cfg.t);
    require_order(cfg.order);
    VerificationReport report;
    if (kind == "congruence")
        report = check_congruence(cfg.t, cfg.order);
    else if (kind == "size-congruence")
        report = check_size_congruence(cfg.t, cfg.order);
    else if (kind == "multiple-congruence")
        report = check_multiple_congruence(cfg.t, cfg.order);
    else if (kind == "recursion")
        report = check_recursion(cfg.t, cfg.order);
    else
        report = check_monotonicity(cfg.t, cfg.order);
    switch (cfg.format) {
        case Format::json: out << to_json(report).dump(2) << "\n"; break;
        case Format::csv: out << report_csv(report); break;
        case Format::plain: out << report_line(report) << "\n";
    }
    return report.passed() ? kPass : kMismatch;
}

int do_asympt_defect(const CliConfig& cfg, const std::vector<int>& samples, std::ostream& out) {
    require_modulus(cfg.t);
    for (int n : samples)
        if (n < 1) throw UsageError("--samples entries must be positive");
    const auto rows = defect_samples(cfg.t, samples, cfg.precision);
    const int digits = static_cast<int>(std::min(cfg.precision, 20u));
    if (cfg.format == Format::json) {
        json doc = json::array();
        for (const auto& s : rows)
            doc.push_back({{"n", s.n},
                           {"exact", s.exact_value.str()},
                           {"predicted_main_term", format_real(s.predicted_main_term, digits)},
                           {"predicted_np_over_t1", format_real(s.predicted_np_over_t1, digits)},
                           {"ratio", format_real(s.ratio, digits)}});
        out << json{{"t", cfg.t}, {"samples", doc}}.dump(2) << "\n";
    } else {
        out << to_csv(std::span<const AsymptoticSample>(rows), digits);
    }
    return kPass;
}

int do_asympt_transform(const CliConfig& cfg, long m, double eps, std::ostream& out) {
    if (m < 1) throw UsageError("--m must be positive");
    if (!(eps > 0)) throw UsageError("--eps must be positive");
    const auto sides = g2_transform_sides(m, eps, cfg.precision);
    const Real residual = g2_transform_check(m, eps, cfg.precision);
    const int digits = static_cast<int>(std::min(cfg.precision, 20u));
    switch (cfg.format) {
        case Format::json:
            out << json{{"m", m},
                        {"eps", eps},
                        {"direct", format_real(sides.direct, digits)},
                        {"transformed", format_real(sides.transformed, digits)},
                        {"residual", format_real(residual, 6)}}
                       .dump(2)
                << "\n";
            break;
        case Format::csv:
            out << "m,eps,direct,transformed,residual\n"
                << m << "," << eps << "," << format_real(sides.direct, digits) << ","
                << format_real(sides.transformed, digits) << "," << format_real(residual, 6) << "\n";
            break;
        case Format::plain:
            out << "residual " << format_real(residual, 6) << "\n";
    }
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    try {
        cfg.precision = precision_from_env();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"Exact t-core tower combinatorics and generating-function checks", "tcore"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{{"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", cfg.format, "Output format: plain, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--precision", cfg.precision, std::string("Working precision in decimal digits (default from ") +
                                                     kPrecisionEnv + ", else 50)")
        ->check(CLI::Range(1u, 100000u));
    app.add_option("--brute-ceiling", cfg.brute_ceiling, "Largest order accepted by brute-force modes")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads for brute-force enumeration")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();

    std::string partition_text, series_kind, mode = "closed", verify_kind, asympt_kind;
    std::vector<int> samples{100, 200, 400};
    long m = 1;
    double eps = 0;

    auto add_partition_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--t", cfg.t, "Modulus")->required();
        sub->add_option("partition", partition_text, "Comma-separated parts; empty for the empty partition");
        return sub;
    };
    auto* core_cmd = add_partition_command("core", "t-core of a partition");
    auto* quotient_cmd = add_partition_command("quotient", "t-quotient, one component per abacus runner");
    auto* tower_cmd = add_partition_command("tower", "t-core tower rows, their sizes and the defect");

    auto* series_cmd = app.add_subcommand("series", "Coefficients of a generating function");
    series_cmd->add_option("kind", series_kind, "T (tower row sizes), D (defect) or cores (generalized cores)")
        ->required()
        ->check(CLI::IsMember({"T", "D", "cores"}));
    series_cmd->add_option("--t", cfg.t, "Modulus")->required();
    series_cmd->add_option("--j", cfg.j, "Tower row (default 0)");
    series_cmd->add_option("--order", cfg.order, "Truncation order")->capture_default_str();
    series_cmd->add_option("--mode", mode, "closed, brute or both")
        ->check(CLI::IsMember({"closed", "brute", "both"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Check an identity up to the given order");
    verify_cmd
        ->add_option("kind", verify_kind,
                     "congruence, size-congruence, multiple-congruence, recursion or monotone")
        ->required()
        ->check(CLI::IsMember({"congruence", "size-congruence", "multiple-congruence", "recursion", "monotone"}));
    verify_cmd->add_option("--t", cfg.t, "Modulus")->required();
    verify_cmd->add_option("--order", cfg.order, "Truncation order")->capture_default_str();

    auto* asympt_cmd = app.add_subcommand("asympt", "Asymptotic comparisons in floating point");
    asympt_cmd->add_option("kind", asympt_kind, "defect or transform")
        ->required()
        ->check(CLI::IsMember({"defect", "transform"}));
    asympt_cmd->add_option("--t", cfg.t, "Modulus (defect)");
    asympt_cmd->add_option("--samples", samples, "Comma-separated n values (defect)")->delimiter(',');
    asympt_cmd->add_option("--m", m, "Scale m in G2(q^m) (transform)")->capture_default_str();
    asympt_cmd->add_option("--eps", eps, "q = e^{-eps} (transform)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*core_cmd) return do_core(cfg, partition_text, out);
        if (*quotient_cmd) return do_quotient(cfg, partition_text, out);
        if (*tower_cmd) return do_tower(cfg, partition_text, out);
        if (*series_cmd) return do_series(cfg, series_kind, mode, out);
        if (*verify_cmd) return do_verify(cfg, verify_kind, out);
        if (asympt_kind == "defect") return do_asympt_defect(cfg, samples, out);
        if (asympt_cmd->count("--eps") == 0) throw UsageError("asympt transform needs --eps");
        return do_asympt_transform(cfg, m, eps, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace tcore::cli
