#ifndef RSF_INTPOLY_HPP
#define RSF_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rsf/errors.hpp"

namespace rsf {

// Dense univariate polynomial over arbitrary-precision integers.
//
// coeffs()[k] is the coefficient of x^k. The vector is kept normalized (no
// trailing zero coefficient), so structural equality coincides with
// mathematical equality. The zero polynomial is the empty vector and reports
// degree() == kZeroDegree, which sorts below every natural number.
class IntPoly {
public:
    static constexpr int kZeroDegree = -1;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<mpz_class> coeffs); // ascending powers

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly x() { return monomial(1, 1); }
    static IntPoly constant(mpz_class c);
    static IntPoly monomial(mpz_class c, unsigned k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    // Coefficient of x^k; zero beyond the degree.
    const mpz_class& coeff(std::size_t k) const;
    const mpz_class& leading_coeff() const; // pre: nonzero polynomial
    bool is_monic() const;

    friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const IntPoly& p, const IntPoly& q) { return !(p == q); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& q);
    IntPoly& operator-=(const IntPoly& q);
    IntPoly& operator*=(const IntPoly& q);

    friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
    friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const mpz_class& c, const IntPoly& p);

private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

// p(q(x)) by Horner's scheme over IntPoly.
IntPoly compose(const IntPoly& p, const IntPoly& q);

// p^k with p^0 = 1.
IntPoly pow(const IntPoly& p, unsigned k);

// Quotient q with p = d*q exactly over the integers. Throws DivisionError as
// soon as a leading-coefficient division is inexact or a remainder survives.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

// True iff d divides p exactly in Z[x]. pre: d != 0.
bool divides(const IntPoly& d, const IntPoly& p);

// Exact integer evaluation (Horner).
mpz_class eval_int(const IntPoly& p, const mpz_class& v);

// Double-precision Horner evaluation. Only for root-residual checks; never
// part of an exact computation.
double eval_float(const IntPoly& p, double v);

// Parses the ASCII polynomial grammar:
//   poly := sign? term (("+" | "-") term)*
//   term := integer | integer "*"? atom | atom
//   atom := "x" ("^" nonneg-integer)?
// Whitespace is ignored; integers are unbounded decimals. Throws ParseError
// with a byte offset on malformed input.
IntPoly parse_poly(std::string_view text);

// Canonical descending-degree rendering: "x^3 + 6*x^2 + 9*x"; zero is "0".
// Coefficient 1 and exponent 1 are omitted. Round-trips through parse_poly.
std::string format_poly(const IntPoly& p);

// Renders the degree-n homogeneous two-variable form: the coefficient of x^k
// becomes the coefficient of a^k b^(n-k). pre: degree(p) <= n.
std::string homogenize(const IntPoly& p, unsigned n,
                       std::string_view var_a = "a", std::string_view var_b = "b");

} // namespace rsf

#endif
