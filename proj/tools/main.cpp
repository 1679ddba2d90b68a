#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rsf/closedforms.hpp"
#include "rsf/graphfile.hpp"
#include "rsf/lintree.hpp"
#include "rsf/oracle.hpp"
#include "rsf/verify.hpp"

namespace {

// Exit codes: 0 success, 1 failed check, 2 bad arguments or malformed input,
// 3 enumeration cap exceeded, 4 oracle mismatch.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

int run_compute(unsigned n, bool oriented, bool homogeneous) {
    rsf::IntPoly p = oriented ? rsf::oriented_forest_poly(n) : rsf::forest_poly(n);
    if (homogeneous)
        std::cout << rsf::homogenize(p, n) << "\n";
    else
        std::cout << rsf::format_poly(p) << "\n";
    return 0;
}

int run_forest_sum(const std::string& path, bool oracle, bool oracle_only, std::size_t cap) {
    rsf::WeightedGraph g = rsf::load_graph_file(path);
    if (g.node_count() == 0) {
        std::cerr << "error: graph has no nodes\n";
        return kExitUsage;
    }

    std::optional<rsf::IntPoly> determinant;
    if (!oracle_only) {
        determinant = g.oriented ? rsf::oriented_forest_sum(g) : rsf::forest_sum(g);
        std::cout << rsf::format_poly(*determinant) << "\n";
    }
    if (!oracle && !oracle_only)
        return 0;

    rsf::ForestReport report;
    try {
        report = g.oriented ? rsf::enumerate_oriented_rsf(g, cap) : rsf::enumerate_rsf(g, cap);
    } catch (const rsf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap to force)\n";
        return kExitCap;
    }

    if (oracle_only) {
        std::cout << rsf::format_poly(report.weighted_sum) << "\n";
        std::cout << "forests: " << report.forest_count << "\n";
        if (report.histogram)
            for (const auto& [k, count] : *report.histogram)
                std::cout << "cycle-edges " << k << ": " << count << "\n";
        return 0;
    }
    if (report.weighted_sum == *determinant) {
        std::cout << "oracle: MATCH (" << report.forest_count << " forests)\n";
        return 0;
    }
    std::cout << "oracle: MISMATCH (enumeration gives " << rsf::format_poly(report.weighted_sum)
              << ")\n";
    return kExitMismatch;
}

int run_factor(unsigned n, bool oriented) {
    struct Factor {
        rsf::IntPoly poly;
        unsigned multiplicity;
    };
    std::vector<Factor> factors;
    rsf::IntPoly expected;

    if (oriented) {
        expected = rsf::oriented_forest_poly(n);
        rsf::IntPoly shift{1, 1};
        for (unsigned k : rsf::divisors(n))
            factors.push_back({rsf::compose(rsf::cyclotomic(k), shift), 1});
    } else {
        expected = rsf::forest_poly(n);
        factors.push_back({rsf::IntPoly::x(), 1});
        if (n % 2 == 0)
            factors.push_back({rsf::IntPoly{4, 1}, 1});
        rsf::IntPoly shift{2, 1};
        for (unsigned k : rsf::divisors(n))
            if (k > 2)
                factors.push_back({rsf::compose(rsf::psi(k), shift), 2});
    }

    rsf::IntPoly product = rsf::IntPoly::one();
    for (const Factor& f : factors) {
        if (f.multiplicity == 1)
            std::cout << rsf::format_poly(f.poly) << "\n";
        else
            std::cout << "(" << rsf::format_poly(f.poly) << ")^" << f.multiplicity << "\n";
        product *= rsf::pow(f.poly, f.multiplicity);
    }
    if (product != expected) {
        std::cout << "verification FAILED: product differs from expansion\n";
        return kExitFail;
    }
    std::cout << "verified: product equals expansion\n";
    return 0;
}

std::optional<std::vector<rsf::VerifyReport>> run_named_check(const std::string& name,
                                                              unsigned n_max) {
    using rsf::VerifyReport;
    std::vector<VerifyReport> reports;
    if (name == "main") {
        for (unsigned n = 1; n <= n_max; ++n)
            reports.push_back(rsf::check_main_theorem(n));
    } else if (name == "oriented") {
        for (unsigned n = 1; n <= n_max; ++n)
            reports.push_back(rsf::check_oriented_theorem(n));
    } else if (name == "c-divisor") {
        for (unsigned n = 1; n <= n_max; ++n)
            reports.push_back(rsf::check_c_divisor(n));
    } else if (name == "factorization") {
        for (unsigned n = 1; n <= n_max; ++n)
            reports.push_back(rsf::check_factorization(n));
    } else if (name == "characterization") {
        if (n_max >= 2) {
            reports.push_back(rsf::check_characterization(rsf::Family::plain, n_max));
            reports.push_back(rsf::check_characterization(rsf::Family::oriented, n_max));
        } else {
            reports.push_back(
                rsf::detail::skipped("characterization-plain", {n_max}, "requires n_max >= 2"));
            reports.push_back(
                rsf::detail::skipped("characterization-oriented", {n_max}, "requires n_max >= 2"));
        }
    } else if (name == "log-concavity") {
        for (unsigned n = 3; n <= n_max; ++n)
            reports.push_back(rsf::check_log_concavity(n));
        if (n_max < 3)
            reports.push_back(rsf::detail::skipped("log-concavity", {n_max}, "requires n >= 3"));
    } else if (name == "roots") {
        for (unsigned n = 1; n <= std::min(n_max, rsf::kRootCheckMaxN); ++n)
            reports.push_back(rsf::check_roots(n));
        if (n_max > rsf::kRootCheckMaxN)
            reports.push_back(rsf::detail::skipped(
                "roots", {n_max},
                "double-precision residuals are only meaningful up to n = " +
                    std::to_string(rsf::kRootCheckMaxN)));
    } else if (name == "oriented-real-roots") {
        for (unsigned n = 1; n <= n_max; ++n)
            reports.push_back(rsf::check_oriented_real_roots(n));
    } else {
        return std::nullopt;
    }
    return reports;
}

int run_verify(unsigned n_max, const std::string& check, const std::string& format) {
    std::vector<rsf::VerifyReport> reports;
    if (check.empty()) {
        reports = rsf::run_suite(n_max);
    } else {
        auto selected = run_named_check(check, n_max);
        if (!selected) {
            std::cerr << "error: unknown check \"" << check << "\"\n";
            return kExitUsage;
        }
        reports = std::move(*selected);
    }

    std::size_t passed = 0;
    for (const rsf::VerifyReport& r : reports)
        if (r.passed)
            ++passed;

    if (format == "structured") {
        std::cout << rsf::format_reports_structured(reports) << "\n";
    } else {
        for (const rsf::VerifyReport& r : reports)
            std::cout << rsf::format_report(r) << "\n";
        std::cout << reports.size() << " checks, " << passed << " passed\n";
    }
    return passed == reports.size() ? 0 : kExitFail;
}

int run_roots(unsigned n) {
    rsf::IntPoly fn = rsf::forest_poly(n);
    char buffer[64];
    for (unsigned k = 0; k < n; ++k) {
        double omega = 2.0 * (std::cos(2.0 * M_PI * k / n) - 1.0);
        double residual = std::abs(rsf::eval_float(fn, omega));
        std::snprintf(buffer, sizeof buffer, "%.6f\t%.3e", omega, residual);
        std::cout << buffer << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted sums of rooted spanning forests of sunlet graphs"};
    app.require_subcommand(1);

    unsigned compute_n = 1;
    bool compute_oriented = false, compute_homogeneous = false;
    auto* compute = app.add_subcommand("compute", "print the closed-form forest polynomial");
    compute->add_option("n", compute_n, "number of cycle vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_flag("--oriented", compute_oriented, "use the oriented family (x+1)^n - 1");
    compute->add_flag("--homogeneous", compute_homogeneous,
                      "print the two-variable homogeneous form");

    std::string fs_path;
    bool fs_oracle = false;
    std::size_t fs_cap = rsf::kDefaultEdgeCap;
    auto* fsum = app.add_subcommand("forest-sum",
                                    "determinant-path forest sum of a graph file");
    fsum->add_option("path", fs_path, "graph file (JSON)")->required();
    fsum->add_flag("--oracle", fs_oracle, "cross-check against brute-force enumeration");
    fsum->add_option("--cap", fs_cap, "edge cap for enumeration (max 63)");

    std::string enum_path;
    std::size_t enum_cap = rsf::kDefaultEdgeCap;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "brute-force enumeration only (no determinant)");
    enumerate->add_option("path", enum_path, "graph file (JSON)")->required();
    enumerate->add_option("--cap", enum_cap, "edge cap for enumeration (max 63)");

    unsigned factor_n = 1;
    bool factor_oriented = false;
    auto* factor = app.add_subcommand("factor", "print the factored forest polynomial");
    factor->add_option("n", factor_n, "number of cycle vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    factor->add_flag("--oriented", factor_oriented, "factor the oriented family");

    unsigned verify_nmax = 12;
    std::string verify_check;
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run the identity check suite");
    verify->add_option("--nmax", verify_nmax, "largest n to check (default 12)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--check", verify_check,
                       "single check: main, oriented, c-divisor, factorization, "
                       "characterization, log-concavity, roots, oriented-real-roots");
    verify->add_option("--format", verify_format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    unsigned roots_n = 1;
    auto* roots = app.add_subcommand("roots", "dump the real roots and float residuals");
    roots->add_option("n", roots_n, "number of cycle vertices")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute)
            return run_compute(compute_n, compute_oriented, compute_homogeneous);
        if (*fsum)
            return run_forest_sum(fs_path, fs_oracle, false, fs_cap);
        if (*enumerate)
            return run_forest_sum(enum_path, false, true, enum_cap);
        if (*factor)
            return run_factor(factor_n, factor_oriented);
        if (*verify)
            return run_verify(verify_nmax, verify_check, verify_format);
        if (*roots)
            return run_roots(roots_n);
    } catch (const rsf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rsf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const rsf::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
