#pragma once

// Command-line frontend: eval, grid, pairs, verify.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepcont/sepcont.hpp"

namespace sepcont::cli {

enum class Format { text, json, csv };

struct Config {
    std::size_t depth = 0;
    std::uint64_t seed = 20240601;
    Format format = Format::text;
    std::string out;
};

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

namespace detail {

inline Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw invalid_input("unknown format '" + s + "'");
}

// "lo:hi" with rational endpoints.
inline std::pair<Rational, Rational> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw invalid_input("range must look like LO:HI, got '" + s + "'");
    Rational lo = parse_rational(s.substr(0, colon));
    Rational hi = parse_rational(s.substr(colon + 1));
    if (hi < lo)
        throw invalid_input("range '" + s + "' is empty");
    return {std::move(lo), std::move(hi)};
}

// Writes to --out when given, else to the supplied stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw invalid_input("cannot open '" + path + "' for writing");
            out_ = &file_;
        }
    }

    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

} // namespace detail

inline int cmd_eval(const std::string& xs, const std::string& ys, bool decimal, const Config& cfg, std::ostream& out) {
    Rational x = parse_rational(xs);
    Rational y = parse_rational(ys);
    WovenFunction w(cfg.depth);
    Rational v = w.eval(x, y);
    detail::Sink sink(cfg.out, out);
    auto& os = sink.stream();
    if (cfg.format == Format::json) {
        nlohmann::ordered_json j;
        j["x"] = x.str();
        j["y"] = y.str();
        j["value"] = v.str();
        j["level"] = *w.pairing().find_x(x);
        if (decimal)
            j["decimal"] = to_decimal(v);
        os << j.dump() << '\n';
    } else {
        os << v.str() << '\n';
        if (decimal)
            os << "decimal(20 sig.): " << to_decimal(v) << '\n';
    }
    return kExitOk;
}

inline int cmd_grid(const GridSpec& spec, const Config& cfg, std::ostream& out) {
    WovenFunction w(cfg.depth);
    std::ostringstream buf;
    write_grid_csv(w, spec, buf);
    detail::Sink sink(cfg.out, out);
    sink.stream() << buf.str();
    return kExitOk;
}

inline int cmd_pairs(std::size_t count, const Config& cfg, std::ostream& out) {
    Pairing p;
    p.extend_to(count);
    detail::Sink sink(cfg.out, out);
    auto& os = sink.stream();
    if (cfg.format == Format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < count; ++n)
            arr.push_back({{"n", n}, {"x", p[n].x.str()}, {"y", p[n].y.str()}});
        os << arr.dump() << '\n';
    } else {
        for (std::size_t n = 0; n < count; ++n)
            os << n << ' ' << p[n].x.str() << ' ' << p[n].y.str() << '\n';
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string suite = "all";
    std::optional<std::size_t> samples;
};

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"all",     "singleton", "welldef", "params",
                                                "density", "witness",   "lipschitz", "oracle"};
    return names;
}

inline std::vector<Report> run_suite(const std::string& suite, std::size_t depth, std::size_t samples_override,
                                     std::uint64_t seed) {
    const Rational pitch = Rational::from_fraction(1, 20);
    const Rational eps = Rational::from_fraction(1, 40);
    const Rational u_lo = Rational::from_fraction(1, 4);
    const Rational u_hi = Rational::from_fraction(3, 4);

    bool all = suite == "all";
    std::size_t oracle_depth = all ? std::min<std::size_t>(depth, 10) : depth;
    if (suite == "oracle" && depth > kOracleLevelLimit)
        throw refusal("oracle suite is limited to depth " + std::to_string(kOracleLevelLimit));

    std::size_t need = depth;
    if (all || suite == "witness")
        need = std::max(need, levels_for_boxes(depth));
    if (all || suite == "oracle")
        need = std::max(need, oracle_depth + 1);
    if (all || suite == "lipschitz")
        need = std::max<std::size_t>(need, 2);
    WovenFunction w(std::max<std::size_t>(need, 1));
    w.freeze(need);

    std::vector<Report> out;
    if (all || suite == "singleton")
        out.push_back(check_singleton_image(w, depth));
    if (all || suite == "welldef")
        out.push_back(check_welldefined(w, depth, depth));
    if (all || suite == "params")
        out.push_back(check_parameter_range(w, depth));
    if (all || suite == "density") {
        out.push_back(density_sweep(w, pitch, eps));
        out.push_back(check_dense_image_form(w, depth, pitch, eps));
    }
    if (all || suite == "witness")
        out.push_back(nonfeeble_witness(w, depth, u_lo, u_hi));
    if (all || suite == "lipschitz") {
        std::size_t s = samples_override ? samples_override : 1000;
        out.push_back(section_continuity_sweep(w, SectionKind::column, depth, s, seed));
        out.push_back(section_continuity_sweep(w, SectionKind::row, depth, s, seed));
    }
    if (all || suite == "oracle")
        out.push_back(check_oracle_equivalence(w, oracle_depth, samples_override ? samples_override : 200, seed));
    return out;
}

inline int cmd_verify(const VerifyOptions& opt, const Config& cfg, std::ostream& out) {
    const auto& names = verify_suites();
    if (std::find(names.begin(), names.end(), opt.suite) == names.end())
        throw invalid_input("unknown suite '" + opt.suite + "'");
    std::vector<Report> reports = run_suite(opt.suite, cfg.depth, opt.samples.value_or(0), cfg.seed);
    detail::Sink sink(cfg.out, out);
    auto& os = sink.stream();
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed;
    if (cfg.format == Format::json) {
        os << to_json(reports).dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            os << to_text(r) << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact construction of a separately continuous but not feebly continuous f: QxQ -> [0,1]"};
    app.require_subcommand(1);

    Config cfg;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: text, json or csv")->capture_default_str();
        sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
    };

    std::string ex, ey;
    bool decimal = false;
    std::size_t eval_depth = 1024;
    auto* eval = app.add_subcommand("eval", "Exact value f(x, y)");
    eval->add_option("--x", ex, "Abscissa, p/q")->required();
    eval->add_option("--y", ey, "Ordinate, p/q")->required();
    eval->add_option("--depth", eval_depth, "Maximum number of levels to build")->capture_default_str();
    eval->add_flag("--decimal", decimal, "Also print a labeled decimal approximation");
    add_common(eval);

    GridSpec grid;
    std::string xr = "0:1", yr = "0:1";
    std::size_t grid_depth = 1024;
    auto* gridc = app.add_subcommand("grid", "CSV of f over {i/d} x {j/d}");
    gridc->add_option("--denominator", grid.denominator, "Lattice denominator d")->capture_default_str();
    gridc->add_option("--x-range", xr, "LO:HI")->capture_default_str();
    gridc->add_option("--y-range", yr, "LO:HI")->capture_default_str();
    gridc->add_option("--max-cells", grid.max_cells, "Refuse larger grids")->capture_default_str();
    gridc->add_option("--depth", grid_depth, "Maximum number of levels to build")->capture_default_str();
    add_common(gridc);

    std::size_t count = 10;
    bool pairs_json = false;
    auto* pairs = app.add_subcommand("pairs", "The first N points of the dense diagonal A");
    pairs->add_option("--count", count, "Number of pairs")->capture_default_str();
    pairs->add_flag("--json", pairs_json, "Emit a JSON array");
    add_common(pairs);

    VerifyOptions vopt;
    std::size_t verify_depth = 64;
    std::size_t samples = 0;
    auto* verify = app.add_subcommand("verify", "Run certificate checks");
    verify->add_option("--suite", vopt.suite, "all, singleton, welldef, params, density, witness, lipschitz, oracle")
        ->capture_default_str();
    verify->add_option("--depth", verify_depth, "Scale parameter of the suite")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    verify->add_option("--samples", samples, "Override the per-check sample count");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        cfg.format = detail::parse_format(format);
        if (*eval) {
            cfg.depth = eval_depth;
            if (cfg.depth < 1)
                throw invalid_input("--depth must be at least 1");
            return cmd_eval(ex, ey, decimal, cfg, out);
        }
        if (*gridc) {
            cfg.depth = grid_depth;
            if (cfg.depth < 1)
                throw invalid_input("--depth must be at least 1");
            std::tie(grid.x_lo, grid.x_hi) = detail::parse_range(xr);
            std::tie(grid.y_lo, grid.y_hi) = detail::parse_range(yr);
            return cmd_grid(grid, cfg, out);
        }
        if (*pairs) {
            if (pairs_json)
                cfg.format = Format::json;
            return cmd_pairs(count, cfg, out);
        }
        cfg.depth = verify_depth;
        if (cfg.depth < 1)
            throw invalid_input("--depth must be at least 1");
        if (samples > 0)
            vopt.samples = samples;
        return cmd_verify(vopt, cfg, out);
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const refusal& e) {
        err << "refused: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace sepcont::cli
