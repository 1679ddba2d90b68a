#ifndef RSF_VERIFY_HPP
#define RSF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsf/intpoly.hpp"

namespace rsf {

// One executed check. A failed check always carries a counterexample; a
// vacuous pass (empty range) carries a "skipped: ..." note instead.
struct VerifyReport {
    std::string check_name;
    std::vector<long long> params;
    bool passed = true;
    std::optional<std::string> counterexample;
    long long elapsed_ms = 0;
};

enum class Family { plain, oriented };

// Chebyshev closed form: the circulant determinant equals forest_poly(n),
// and for n >= 3 the sunlet pipeline agrees as well. For n <= 12 the result
// is also compared against embedded reference expansions.
VerifyReport check_main_theorem(unsigned n);

// Oriented closed form: the cyclic bidiagonal determinant equals
// (x+1)^n - 1 for every n, and the oriented sunlet pipeline agrees for
// n >= 3.
VerifyReport check_oriented_theorem(unsigned n);

// c_n(x) divides forest_poly(n); 0 is always a root and -4 is for even n.
VerifyReport check_c_divisor(unsigned n);

// Factored constructions reproduce both polynomial families exactly.
VerifyReport check_factorization(unsigned n);

// Degree/monicity for n <= n_max, composition identities for n*m <= n_max in
// both orders, and divisibility iff index divisibility for all n,m <= n_max.
// pre: n_max >= 2.
VerifyReport check_characterization(Family family, unsigned n_max);

// alpha_j^2 >= alpha_{j-1} * alpha_{j+1} for the coefficients of
// forest_poly(n), plus a direct unimodality scan. pre: n >= 3.
VerifyReport check_log_concavity(unsigned n);

// Residuals of forest_poly(n) at 2(cos(2 pi k / n) - 1) stay below
// tol * sum(|coeff|) in double precision; the rational roots 0 and (for even
// n) -4 are confirmed exactly.
VerifyReport check_roots(unsigned n, double tol);
VerifyReport check_roots(unsigned n);

// 1e-9 for n <= 20; 1e-6 above, where coefficient magnitudes pass 1e10.
double default_root_tol(unsigned n);

// Above n = 30 the double-precision residual outgrows even the loose
// tolerance, so the suite sweep stops there.
inline constexpr unsigned kRootCheckMaxN = 30;

// (x+1)^n - 1 vanishes at 0 always and at -2 exactly for even n.
VerifyReport check_oriented_real_roots(unsigned n);

// Every check over its documented range, in deterministic order.
std::vector<VerifyReport> run_suite(unsigned n_max);

// One tab-separated line per report: name, params, PASS|FAIL, elapsed_ms;
// counterexamples and notes follow on indented continuation lines.
std::string format_report(const VerifyReport& report);

// JSON array of reports for machine consumption.
std::string format_reports_structured(const std::vector<VerifyReport>& reports);

namespace detail {

// Report builders shared by the checks; unit tests drive fault injection
// through these.
VerifyReport expect_equal(std::string check_name, std::vector<long long> params,
                          const IntPoly& actual, const IntPoly& expected);
VerifyReport skipped(std::string check_name, std::vector<long long> params,
                     std::string why);

} // namespace detail

} // namespace rsf

#endif
