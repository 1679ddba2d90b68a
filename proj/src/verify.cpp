#include "rsf/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "rsf/closedforms.hpp"
#include "rsf/lintree.hpp"
#include "rsf/oracle.hpp"

namespace rsf {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Reference expansions of forest_poly(1..12), kept as text and re-parsed, so
// a transcription slip in either place cannot go unnoticed.
constexpr std::array<const char*, 12> kReferenceForest = {
    "x",
    "x^2 + 4*x",
    "x^3 + 6*x^2 + 9*x",
    "x^4 + 8*x^3 + 20*x^2 + 16*x",
    "x^5 + 10*x^4 + 35*x^3 + 50*x^2 + 25*x",
    "x^6 + 12*x^5 + 54*x^4 + 112*x^3 + 105*x^2 + 36*x",
    "x^7 + 14*x^6 + 77*x^5 + 210*x^4 + 294*x^3 + 196*x^2 + 49*x",
    "x^8 + 16*x^7 + 104*x^6 + 352*x^5 + 660*x^4 + 672*x^3 + 336*x^2 + 64*x",
    "x^9 + 18*x^8 + 135*x^7 + 546*x^6 + 1287*x^5 + 1782*x^4 + 1386*x^3 + 540*x^2 + 81*x",
    "x^10 + 20*x^9 + 170*x^8 + 800*x^7 + 2275*x^6 + 4004*x^5 + 4290*x^4 + 2640*x^3 + 825*x^2"
    " + 100*x",
    "x^11 + 22*x^10 + 209*x^9 + 1122*x^8 + 3740*x^7 + 8008*x^6 + 11011*x^5 + 9438*x^4"
    " + 4719*x^3 + 1210*x^2 + 121*x",
    "x^12 + 24*x^11 + 252*x^10 + 1520*x^9 + 5814*x^8 + 14688*x^7 + 24752*x^6 + 27456*x^5"
    " + 19305*x^4 + 8008*x^3 + 1716*x^2 + 144*x",
};

VerifyReport pass(std::string name, std::vector<long long> params) {
    return VerifyReport{std::move(name), std::move(params), true, std::nullopt, 0};
}

VerifyReport fail(std::string name, std::vector<long long> params, std::string counterexample) {
    return VerifyReport{std::move(name), std::move(params), false,
                        std::move(counterexample), 0};
}

// Cyclic lower-shift matrix with a+b on the diagonal and -b one step to the
// right (wrapping): the collapsed oriented sunlet's internal block. The wrap
// rule keeps n = 1, 2 meaningful.
PolyMatrix oriented_internal_matrix(std::size_t n, const IntPoly& a, const IntPoly& b) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) += a + b;
        m.at(i, (i + 1) % n) -= b;
    }
    return m;
}

std::string describe_mismatch(const IntPoly& actual, const IntPoly& expected) {
    return "got " + format_poly(actual) + ", expected " + format_poly(expected);
}

} // namespace

namespace detail {

VerifyReport expect_equal(std::string check_name, std::vector<long long> params,
                          const IntPoly& actual, const IntPoly& expected) {
    if (actual == expected)
        return pass(std::move(check_name), std::move(params));
    return fail(std::move(check_name), std::move(params), describe_mismatch(actual, expected));
}

VerifyReport skipped(std::string check_name, std::vector<long long> params, std::string why) {
    VerifyReport r = pass(std::move(check_name), std::move(params));
    r.counterexample = "skipped: " + std::move(why);
    return r;
}

} // namespace detail

VerifyReport check_main_theorem(unsigned n) {
    auto start = Clock::now();
    IntPoly expected = forest_poly(n);
    VerifyReport report =
        detail::expect_equal("main-theorem", {n},
                             det(circulant_internal_matrix(n, IntPoly::x(), IntPoly::one())),
                             expected);
    if (report.passed && n >= 3) {
        report = detail::expect_equal("main-theorem", {n},
                                      forest_sum(build_sunlet(n, IntPoly::x(), IntPoly::one())),
                                      expected);
    }
    if (report.passed && n >= 1 && n <= kReferenceForest.size()) {
        report = detail::expect_equal("main-theorem", {n}, expected,
                                      parse_poly(kReferenceForest[n - 1]));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_oriented_theorem(unsigned n) {
    auto start = Clock::now();
    IntPoly expected = oriented_forest_poly(n);
    VerifyReport report =
        detail::expect_equal("oriented-theorem", {n},
                             det(oriented_internal_matrix(n, IntPoly::x(), IntPoly::one())),
                             expected);
    if (report.passed && n >= 3) {
        report = detail::expect_equal(
            "oriented-theorem", {n},
            oriented_forest_sum(build_oriented_sunlet(n, IntPoly::x(), IntPoly::one())),
            expected);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_c_divisor(unsigned n) {
    auto start = Clock::now();
    IntPoly fn = forest_poly(n);
    VerifyReport report = pass("c-divisor", {n});
    if (!divides(c_poly(n), fn)) {
        report = fail("c-divisor", {n},
                      format_poly(c_poly(n)) + " does not divide " + format_poly(fn));
    } else if (eval_int(fn, 0) != 0) {
        report = fail("c-divisor", {n}, "F(0) = " + eval_int(fn, 0).get_str());
    } else if (n % 2 == 0 && eval_int(fn, -4) != 0) {
        report = fail("c-divisor", {n}, "F(-4) = " + eval_int(fn, -4).get_str());
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_factorization(unsigned n) {
    auto start = Clock::now();
    VerifyReport report =
        detail::expect_equal("factorization", {n}, factored_forest_poly(n), forest_poly(n));
    if (report.passed) {
        report = detail::expect_equal("factorization", {n}, factored_oriented_poly(n),
                                      oriented_forest_poly(n));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_characterization(Family family, unsigned n_max) {
    auto start = Clock::now();
    const char* name =
        family == Family::plain ? "characterization-plain" : "characterization-oriented";
    auto member = family == Family::plain ? forest_poly : oriented_forest_poly;

    std::vector<IntPoly> p(n_max + 1);
    for (unsigned n = 1; n <= n_max; ++n)
        p[n] = member(n);

    VerifyReport report = pass(name, {n_max});
    auto fail_with = [&](std::string why) { report = fail(name, {n_max}, std::move(why)); };

    for (unsigned n = 1; n <= n_max && report.passed; ++n) {
        if (p[n].degree() != static_cast<int>(n))
            fail_with("degree(P_" + std::to_string(n) + ") = " + std::to_string(p[n].degree()));
        else if (!p[n].is_monic())
            fail_with("P_" + std::to_string(n) + " is not monic: " + format_poly(p[n]));
    }
    for (unsigned n = 1; n <= n_max && report.passed; ++n) {
        for (unsigned m = 1; n * m <= n_max && report.passed; ++m) {
            if (compose(p[n], p[m]) != p[n * m])
                fail_with("P_" + std::to_string(n) + "(P_" + std::to_string(m) +
                          ") != P_" + std::to_string(n * m));
            else if (compose(p[m], p[n]) != p[n * m])
                fail_with("P_" + std::to_string(m) + "(P_" + std::to_string(n) +
                          ") != P_" + std::to_string(n * m));
        }
    }
    for (unsigned n = 1; n <= n_max && report.passed; ++n) {
        for (unsigned m = 1; m <= n_max && report.passed; ++m) {
            bool d = divides(p[n], p[m]);
            if (d != (m % n == 0))
                fail_with("P_" + std::to_string(n) + (d ? " | P_" : " does not divide P_") +
                          std::to_string(m) + " but " + std::to_string(n) +
                          (m % n == 0 ? " | " : " does not divide ") + std::to_string(m));
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_log_concavity(unsigned n) {
    auto start = Clock::now();
    if (n < 3)
        return detail::skipped("log-concavity", {n}, "requires n >= 3");
    IntPoly fn = forest_poly(n);
    VerifyReport report = pass("log-concavity", {n});
    for (unsigned j = 2; j + 1 <= n && report.passed; ++j) {
        mpz_class lhs = fn.coeff(j) * fn.coeff(j);
        mpz_class rhs = fn.coeff(j - 1) * fn.coeff(j + 1);
        if (lhs < rhs) {
            report = fail("log-concavity", {n},
                          "alpha_" + std::to_string(j) + "^2 = " + lhs.get_str() + " < " +
                              rhs.get_str());
        }
    }
    if (report.passed) {
        // unimodal: never increases again after the first decrease
        bool decreasing = false;
        for (unsigned j = 2; j <= n; ++j) {
            if (fn.coeff(j) < fn.coeff(j - 1)) {
                decreasing = true;
            } else if (decreasing && fn.coeff(j) > fn.coeff(j - 1)) {
                report = fail("log-concavity", {n},
                              "coefficients rise again at j = " + std::to_string(j));
                break;
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

double default_root_tol(unsigned n) {
    return n <= 20 ? 1e-9 : 1e-6;
}

VerifyReport check_roots(unsigned n) {
    return check_roots(n, default_root_tol(n));
}

VerifyReport check_roots(unsigned n, double tol) {
    auto start = Clock::now();
    IntPoly fn = forest_poly(n);
    VerifyReport report = pass("roots", {n});

    if (eval_int(fn, 0) != 0)
        report = fail("roots", {n}, "x = 0 is not an exact root");
    if (report.passed && n % 2 == 0 && eval_int(fn, -4) != 0)
        report = fail("roots", {n}, "x = -4 is not an exact root");

    if (report.passed) {
        double scale = 0.0;
        for (const mpz_class& c : fn.coeffs())
            scale += std::abs(c.get_d());
        for (unsigned k = 0; k < n && report.passed; ++k) {
            double omega = 2.0 * (std::cos(2.0 * M_PI * k / n) - 1.0);
            double residual = std::abs(eval_float(fn, omega));
            if (residual > tol * scale) {
                std::ostringstream msg;
                msg << "residual " << residual << " at k = " << k << " (omega = " << omega
                    << ", bound = " << tol * scale << ")";
                report = fail("roots", {n}, msg.str());
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerifyReport check_oriented_real_roots(unsigned n) {
    auto start = Clock::now();
    IntPoly fn = oriented_forest_poly(n);
    VerifyReport report = pass("oriented-real-roots", {n});
    if (eval_int(fn, 0) != 0) {
        report = fail("oriented-real-roots", {n}, "x = 0 is not a root");
    } else {
        bool root_at_minus2 = eval_int(fn, -2) == 0;
        if (root_at_minus2 != (n % 2 == 0))
            report = fail("oriented-real-roots", {n},
                          root_at_minus2 ? "-2 is a root at odd n" : "-2 is not a root at even n");
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

std::vector<VerifyReport> run_suite(unsigned n_max) {
    std::vector<VerifyReport> reports;
    for (unsigned n = 1; n <= n_max; ++n)
        reports.push_back(check_main_theorem(n));
    for (unsigned n = 1; n <= n_max; ++n)
        reports.push_back(check_oriented_theorem(n));
    for (unsigned n = 1; n <= n_max; ++n)
        reports.push_back(check_c_divisor(n));
    for (unsigned n = 1; n <= n_max; ++n)
        reports.push_back(check_factorization(n));
    if (n_max >= 2) {
        reports.push_back(check_characterization(Family::plain, n_max));
        reports.push_back(check_characterization(Family::oriented, n_max));
    } else {
        reports.push_back(detail::skipped("characterization-plain", {n_max}, "requires n_max >= 2"));
        reports.push_back(
            detail::skipped("characterization-oriented", {n_max}, "requires n_max >= 2"));
    }
    if (n_max >= 3) {
        for (unsigned n = 3; n <= n_max; ++n)
            reports.push_back(check_log_concavity(n));
    } else {
        reports.push_back(detail::skipped("log-concavity", {n_max}, "requires n_max >= 3"));
    }
    for (unsigned n = 1; n <= std::min(n_max, kRootCheckMaxN); ++n)
        reports.push_back(check_roots(n));
    if (n_max > kRootCheckMaxN) {
        reports.push_back(detail::skipped(
            "roots", {n_max},
            "double-precision residuals are only meaningful up to n = " +
                std::to_string(kRootCheckMaxN)));
    }
    for (unsigned n = 1; n <= n_max; ++n)
        reports.push_back(check_oriented_real_roots(n));
    return reports;
}

std::string format_report(const VerifyReport& report) {
    std::string params;
    for (std::size_t i = 0; i < report.params.size(); ++i) {
        if (i > 0)
            params += ',';
        params += std::to_string(report.params[i]);
    }
    if (params.empty())
        params = "-";
    std::string line = report.check_name + "\t" + params + "\t" +
                       (report.passed ? "PASS" : "FAIL") + "\t" +
                       std::to_string(report.elapsed_ms);
    if (report.counterexample) {
        std::istringstream in(*report.counterexample);
        for (std::string cont; std::getline(in, cont);)
            line += "\n    " + cont;
    }
    return line;
}

std::string format_reports_structured(const std::vector<VerifyReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const VerifyReport& r : reports) {
        nlohmann::json item;
        item["check"] = r.check_name;
        item["params"] = r.params;
        item["passed"] = r.passed;
        item["counterexample"] =
            r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
        item["elapsed_ms"] = r.elapsed_ms;
        out.push_back(item);
    }
    return out.dump(2);
}

} // namespace rsf
