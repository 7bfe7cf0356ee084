// Command-line front end for the ordstat shared library.  Talks to the
// library exclusively through the C API in ordstat.h and emits CSV.
//
// Exit codes: 0 success / verified, 1 verification mismatch, 2 input or
// domain error, 3 nonexistent moment, 4 numerical failure, 5 boundary
// maximizer.

#include "ordstat.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitVerifyMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoMoment = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitBoundary = 5;

int exit_code_for(ordstat_status s) {
    switch (s) {
        case ORDSTAT_OK: return 0;
        case ORDSTAT_ERR_INVALID:
        case ORDSTAT_ERR_DOMAIN: return kExitInput;
        case ORDSTAT_ERR_NO_MOMENT: return kExitNoMoment;
        case ORDSTAT_ERR_NUMERIC: return kExitNumeric;
        case ORDSTAT_ERR_BOUNDARY: return kExitBoundary;
    }
    return kExitInput;
}

[[noreturn]] void fail(ordstat_status s) {
    std::cerr << "error: " << ordstat_last_error() << "\n";
    std::exit(exit_code_for(s));
}

void check(ordstat_status s) {
    if (s != ORDSTAT_OK) fail(s);
}

[[noreturn]] void fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitInput);
}

// All numeric cells carry 12 significant digits.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string boolean(bool b) { return b ? "true" : "false"; }

struct Csv {
    std::string text;
    void line(const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) text += ',';
            text += cells[i];
        }
        text += '\n';
    }
};

void emit(const Csv& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << csv.text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail_input("cannot open output file: " + out_path);
    f << csv.text;
}

struct NRange {
    int lo = 0;
    int hi = 0;
};

// "A..B" inclusive, or a single integer meaning A=B.
NRange parse_n_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            size_t used = 0;
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument("junk");
            return {v, v};
        }
        size_t used = 0;
        const int lo = std::stoi(text.substr(0, pos), &used);
        if (used != pos) throw std::invalid_argument("junk");
        const int hi = std::stoi(text.substr(pos + 2), &used);
        if (used != text.size() - pos - 2) throw std::invalid_argument("junk");
        if (hi < lo) throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        fail_input("invalid n range '" + text + "' (expected A..B or a single integer)");
    }
}

int parse_single_n(const std::string& text) {
    const NRange r = parse_n_range(text);
    if (r.lo != r.hi) fail_input("this command takes a single n, not a range");
    return r.lo;
}

using DistHandle = std::unique_ptr<ordstat_dist, decltype(&ordstat_dist_free)>;
using CostHandle = std::unique_ptr<ordstat_cost, decltype(&ordstat_cost_free)>;

DistHandle make_dist(const std::string& spec) {
    ordstat_dist* d = nullptr;
    check(ordstat_dist_parse(spec.c_str(), &d));
    return DistHandle(d, &ordstat_dist_free);
}

CostHandle make_cost(const std::string& spec) {
    ordstat_cost* c = nullptr;
    check(ordstat_cost_parse(spec.c_str(), &c));
    return CostHandle(c, &ordstat_cost_free);
}

int side_code(const std::string& side) {
    std::string s = side;
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "bottom") return ORDSTAT_SIDE_BOTTOM;
    if (s == "top") return ORDSTAT_SIDE_TOP;
    fail_input("side must be 'bottom' or 'top'");
}


const char* curvature_name(int code) {
    switch (code) {
        case ORDSTAT_CURV_CONVEX: return "Convex";
        case ORDSTAT_CURV_CONCAVE: return "Concave";
        default: return "Neither";
    }
}

// ---------------------------------------------------------------------------

int cmd_table(const std::string& dist_spec, int k, const std::string& side,
              const std::string& n_text, const std::string& out_path) {
    const DistHandle dist = make_dist(dist_spec);
    const int side_c = side_code(side);
    const NRange range = parse_n_range(n_text);
    const int len = range.hi - range.lo + 1;

    std::vector<double> mu(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
        const int n = range.lo + i;
        const int bottom_k = side_c == ORDSTAT_SIDE_BOTTOM ? k : n - k + 1;
        if (bottom_k < 1 || bottom_k > n)
            fail_input("order statistic index out of range at n=" + std::to_string(n));
        check(ordstat_expected_order_stat(dist.get(), bottom_k, n,
                                          &mu[static_cast<size_t>(i)]));
    }

    Csv csv;
    csv.line({"n", "mu", "first_diff", "second_diff"});
    for (int i = 0; i < len; ++i) {
        const int n = range.lo + i;
        std::string d1, d2;
        if (i >= 1) d1 = num(mu[i] - mu[i - 1]);
        if (i >= 1 && i + 1 < len) d2 = num(mu[i + 1] - 2.0 * mu[i] + mu[i - 1]);
        csv.line({std::to_string(n), num(mu[static_cast<size_t>(i)]), d1, d2});
    }
    emit(csv, out_path);
    return 0;
}

int cmd_verify(const std::string& dist_spec, int k, const std::string& side,
               const std::string& n_text, const std::string& out_path) {
    const DistHandle dist = make_dist(dist_spec);
    const int side_c = side_code(side);
    const NRange range = parse_n_range(n_text);
    const int len = range.hi - range.lo + 1;

    std::vector<double> values(static_cast<size_t>(len));
    std::vector<double> d1(len > 1 ? static_cast<size_t>(len - 1) : 0);
    std::vector<double> d2(len > 2 ? static_cast<size_t>(len - 2) : 0);
    ordstat_shape_summary summary{};
    check(ordstat_shape_sequence(dist.get(), k, side_c, range.lo, range.hi,
                                 values.data(), d1.empty() ? nullptr : d1.data(),
                                 d2.empty() ? nullptr : d2.data(), nullptr,
                                 nullptr, 0, &summary));

    Csv csv;
    csv.line({"n", "mu", "second_diff_direct", "second_diff_identity", "abs_err"});
    for (int i = 0; i < len; ++i) {
        const int n = range.lo + i;
        std::string direct, identity, abs_err;
        if (i >= 1 && i + 1 < len) {
            const double dd = d2[static_cast<size_t>(i) - 1];
            double ident = 0.0;
            // The centred second difference at n matches the single-integral
            // form anchored at n-1 (bottom) or n (top).
            const ordstat_status s =
                side_c == ORDSTAT_SIDE_BOTTOM
                    ? ordstat_bottom_second_difference(dist.get(), k, n - 1, &ident)
                    : ordstat_top_second_difference(dist.get(), k, n, &ident);
            check(s);
            direct = num(dd);
            identity = num(ident);
            abs_err = num(std::fabs(dd - ident));
        }
        csv.line({std::to_string(n), num(values[static_cast<size_t>(i)]), direct,
                  identity, abs_err});
    }
    emit(csv, out_path);

    const char* verdict = curvature_name(summary.curvature);
    std::cout << "shape=" << verdict << " violations=" << summary.violation_count
              << "\n";

    int mhr = 0, mrhr = 0;
    check(ordstat_dist_classify(dist.get(), 0, 0.0, &mhr, &mrhr));
    const bool class_ok =
        side_c == ORDSTAT_SIDE_TOP
            ? (mhr == ORDSTAT_MONO_INCREASING || mhr == ORDSTAT_MONO_CONSTANT)
            : (mrhr == ORDSTAT_MONO_DECREASING || mrhr == ORDSTAT_MONO_CONSTANT);
    std::cerr << "hazard class " << (class_ok ? "holds" : "does not hold")
              << (k == 1 ? "; k=1 needs no class assumption" : "") << "\n";

    const bool shape_ok =
        summary.violation_count == 0 &&
        (side_c == ORDSTAT_SIDE_TOP
             ? (summary.curvature == ORDSTAT_CURV_CONCAVE &&
                summary.monotone == ORDSTAT_TREND_NONDECREASING)
             : (summary.curvature == ORDSTAT_CURV_CONVEX &&
                summary.monotone == ORDSTAT_TREND_NONINCREASING));
    return shape_ok ? 0 : kExitVerifyMismatch;
}

int cmd_optimize(const std::string& dist_spec, const std::string& cost_spec,
                 int n_max_flag, std::optional<double> reserve,
                 const std::string& out_path) {
    const DistHandle dist = make_dist(dist_spec);
    const CostHandle cost = make_cost(cost_spec);

    int n_max = n_max_flag;
    if (n_max <= 0) {
        const int cap = ordstat_cost_max_n(cost.get());
        n_max = cap < 10000 ? cap : 10000;
    }

    std::vector<double> g(static_cast<size_t>(n_max) + 1);
    ordstat_auction_result res{};
    check(ordstat_optimize(dist.get(), cost.get(),  n_max,
                           reserve ? *reserve : std::nan(""), 0, g.data(), &res));

    Csv csv;
    csv.line({"n", "revenue", "cost", "g"});
    for (int n = 2; n <= res.evaluated_max_n; ++n) {
        double c = 0.0;
        check(ordstat_cost_eval(cost.get(), n, &c));
        const double gn = g[static_cast<size_t>(n)];
        csv.line({std::to_string(n), num(gn + c), num(c), num(gn)});
    }
    emit(csv, out_path);
    std::cout << "n_star=" << res.n_star << " shortcut="
              << (res.concavity_certified ? "true" : "false")
              << " tie_broken=" << (res.tie_broken ? "true" : "false") << "\n";
    return 0;
}

int cmd_reserve(const std::string& dist_spec, double r, const std::string& n_text,
                const std::string& out_path) {
    const DistHandle dist = make_dist(dist_spec);
    const int n = parse_single_n(n_text);

    double revenue = 0.0;
    check(ordstat_reserve_revenue(dist.get(), r, n, &revenue));
    const double F_r = ordstat_dist_cdf(dist.get(), r);
    int cond = 0;
    check(ordstat_reserve_condition(dist.get(), r, n, &cond));
    double j = 0.0;
    check(ordstat_reserve_j(F_r, n, &j));
    std::string second_diff;
    if (n >= 3) {
        double sd = 0.0;
        check(ordstat_reserve_second_difference(dist.get(), r, n, &sd));
        second_diff = num(sd);
    }

    Csv csv;
    csv.line({"r", "n", "F_r", "revenue", "condition_ok", "reserve_j",
              "second_diff_I"});
    csv.line({num(r), std::to_string(n), num(F_r), num(revenue),
              boolean(cond != 0), num(j), second_diff});
    emit(csv, out_path);
    return 0;
}

int cmd_simulate(const std::string& dist_spec, int k, const std::string& n_text,
                 long long trials, uint64_t seed, std::optional<double> reserve,
                 const std::string& out_path) {
    const DistHandle dist = make_dist(dist_spec);
    const int n = parse_single_n(n_text);

    ordstat_estimate est{};
    double quad = 0.0;
    if (reserve) {
        check(ordstat_sim_reserve_revenue(dist.get(), *reserve, n, trials, seed,
                                          &est));
        check(ordstat_reserve_revenue(dist.get(), *reserve, n, &quad));
    } else {
        check(ordstat_sim_order_stat(dist.get(), k, n, trials, seed, &est));
        check(ordstat_expected_order_stat(dist.get(), k, n, &quad));
    }

    std::string se, sigma;
    if (trials > 1 && std::isfinite(est.std_error)) {
        se = num(est.std_error);
        if (est.std_error > 0.0)
            sigma = num(std::fabs(est.mean - quad) / est.std_error);
    }

    Csv csv;
    csv.line({"estimate", "std_error", "trials", "seed", "quadrature_value",
              "sigma_distance"});
    csv.line({num(est.mean), se, std::to_string(est.trials),
              std::to_string(seed), num(quad), sigma});
    emit(csv, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected order statistics, shape certification, and auction "
                 "design calculations (CSV output)"};
    app.require_subcommand(1);

    std::string dist_spec, cost_spec, side = "bottom", n_text = "1", out_path;
    int k = 1;
    int n_max = 0;
    double reserve_val = 0.0;
    long long trials = 1000000;
    uint64_t seed = 0;

    auto* table = app.add_subcommand("table", "Tabulate expectations over a range of n");
    table->add_option("--dist", dist_spec, "distribution spec")->required();
    table->add_option("--k", k, "order statistic index")->required();
    table->add_option("--side", side, "bottom|top");
    table->add_option("--n", n_text, "n range A..B or single n")->required();
    table->add_option("--out", out_path, "write CSV to a file");

    auto* verify = app.add_subcommand("verify", "Certify sequence shape against the hazard class");
    verify->add_option("--dist", dist_spec)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--side", side);
    verify->add_option("--n", n_text)->required();
    verify->add_option("--out", out_path);

    auto* optimize = app.add_subcommand("optimize", "Optimal bidder count under a recruiting cost");
    optimize->add_option("--dist", dist_spec)->required();
    optimize->add_option("--cost", cost_spec, "cost spec, poly:... or table:...")->required();
    optimize->add_option("--n-max", n_max, "scan bound (default 10000 / table span)");
    auto* opt_reserve = optimize->add_option("--reserve", reserve_val, "reserve price");
    optimize->add_option("--out", out_path);

    auto* reserve = app.add_subcommand("reserve", "Reserve-price revenue and concavity diagnostics");
    reserve->add_option("--dist", dist_spec)->required();
    reserve->add_option("--reserve", reserve_val, "reserve price")->required();
    reserve->add_option("--n", n_text, "number of bidders")->required();
    reserve->add_option("--out", out_path);

    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo check of a quadrature value");
    simulate->add_option("--dist", dist_spec)->required();
    simulate->add_option("--k", k);
    simulate->add_option("--n", n_text)->required();
    simulate->add_option("--trials", trials);
    simulate->add_option("--seed", seed);
    auto* sim_reserve = simulate->add_option("--reserve", reserve_val, "simulate reserve revenue instead");
    simulate->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(table))
            return cmd_table(dist_spec, k, side, n_text, out_path);
        if (app.got_subcommand(verify))
            return cmd_verify(dist_spec, k, side, n_text, out_path);
        if (app.got_subcommand(optimize))
            return cmd_optimize(dist_spec, cost_spec, n_max,
                                opt_reserve->count() ? std::optional<double>(reserve_val)
                                                     : std::nullopt,
                                out_path);
        if (app.got_subcommand(reserve))
            return cmd_reserve(dist_spec, reserve_val, n_text, out_path);
        if (app.got_subcommand(simulate))
            return cmd_simulate(dist_spec, k, n_text, trials, seed,
                                sim_reserve->count() ? std::optional<double>(reserve_val)
                                                     : std::nullopt,
                                out_path);
    } catch (const std::exception& e) {
        fail_input(e.what());
    }
    return kExitInput;
}
