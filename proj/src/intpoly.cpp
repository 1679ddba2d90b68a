#include "rsf/intpoly.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

namespace rsf {

namespace {
const mpz_class kZero = 0;
} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<mpz_class> coeffs) : coeffs_(coeffs) {
    normalize();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0)
        p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, unsigned k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, kZero);
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const mpz_class& IntPoly::leading_coeff() const {
    if (coeffs_.empty())
        throw DomainError("leading_coeff of the zero polynomial");
    return coeffs_.back();
}

bool IntPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size())
        coeffs_.resize(q.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
        coeffs_[k] += q.coeffs_[k];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
    if (coeffs_.size() < q.coeffs_.size())
        coeffs_.resize(q.coeffs_.size(), kZero);
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
        coeffs_[k] -= q.coeffs_[k];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        return IntPoly();
    IntPoly r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            r.coeffs_[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    // Integer coefficients have no zero divisors, so the leading product is
    // nonzero and r is already normalized.
    return r;
}

IntPoly operator*(const mpz_class& c, const IntPoly& p) {
    if (c == 0)
        return IntPoly();
    IntPoly r = p;
    for (auto& e : r.coeffs_)
        e *= c;
    return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& q) {
    *this = *this * q;
    return *this;
}

IntPoly compose(const IntPoly& p, const IntPoly& q) {
    IntPoly r;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        r = r * q;
        r += IntPoly::constant(p.coeffs()[i]);
    }
    return r;
}

IntPoly pow(const IntPoly& p, unsigned k) {
    IntPoly r = IntPoly::one();
    for (unsigned i = 0; i < k; ++i)
        r *= p;
    return r;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero())
        throw DivisionError("division by the zero polynomial");
    if (p.is_zero())
        return IntPoly();
    if (p.degree() < d.degree())
        throw DivisionError("degree of dividend below degree of divisor");

    std::vector<mpz_class> rem = p.coeffs();
    const std::vector<mpz_class>& div = d.coeffs();
    const mpz_class& lead = div.back();
    std::size_t qsize = rem.size() - div.size() + 1;
    std::vector<mpz_class> quot(qsize, 0);

    for (std::size_t step = qsize; step-- > 0;) {
        mpz_class& top = rem[step + div.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw DivisionError("leading coefficient does not divide exactly");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t j = 0; j + 1 < div.size(); ++j)
            rem[step + j] -= q * div[j];
        top = 0;
        quot[step] = std::move(q);
    }
    for (const auto& c : rem)
        if (c != 0)
            throw DivisionError("nonzero remainder");
    return IntPoly(std::move(quot));
}

bool divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero())
        throw DomainError("divisibility test against the zero polynomial");
    try {
        exact_div(p, d);
        return true;
    } catch (const DivisionError&) {
        return false;
    }
}

mpz_class eval_int(const IntPoly& p, const mpz_class& v) {
    mpz_class r = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        r = r * v + p.coeffs()[i];
    return r;
}

double eval_float(const IntPoly& p, double v) {
    double r = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        r = r * v + p.coeffs()[i].get_d();
    return r;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos); }

    mpz_class parse_digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected digits");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    unsigned parse_exponent() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a nonnegative exponent after '^'");
        mpz_class e = parse_digits();
        if (e > 1000000)
            fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    // atom := "x" ("^" nonneg-integer)?
    unsigned parse_atom() {
        ++pos; // consumes 'x'
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            return parse_exponent();
        }
        return 1;
    }

    // term := integer | integer "*"? atom | atom. Integers are optionally
    // signed; an explicit sign here folds with the separator sign.
    IntPoly parse_term(int sign) {
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-')
                sign = -sign;
            ++pos;
            skip_ws();
        }
        if (pos >= text.size())
            fail("expected a term");
        if (text[pos] == 'x') {
            unsigned k = parse_atom();
            return IntPoly::monomial(sign, k);
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer or 'x'");
        mpz_class c = parse_digits();
        if (sign < 0)
            c = -c;
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'x')
                fail("expected 'x' after '*'");
            return IntPoly::monomial(std::move(c), parse_atom());
        }
        if (pos < text.size() && text[pos] == 'x')
            return IntPoly::monomial(std::move(c), parse_atom());
        return IntPoly::constant(std::move(c));
    }

    IntPoly parse() {
        if (at_end())
            fail("empty input");
        IntPoly result = parse_term(1);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            ++pos;
            result += parse_term(op == '-' ? -1 : 1);
        }
        return result;
    }
};

void append_decimal(std::string& out, const mpz_class& c) {
    out += c.get_str();
}

} // namespace

IntPoly parse_poly(std::string_view text) {
    PolyParser parser{text};
    return parser.parse();
}

std::string format_poly(const IntPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const mpz_class& c = p.coeffs()[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class mag = abs(c);
        if (i == 0) {
            append_decimal(out, mag);
        } else {
            if (mag != 1) {
                append_decimal(out, mag);
                out += '*';
            }
            out += 'x';
            if (i >= 2) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::string homogenize(const IntPoly& p, unsigned n,
                       std::string_view var_a, std::string_view var_b) {
    if (p.degree() > static_cast<int>(n))
        throw DomainError("homogenize: polynomial degree exceeds requested total degree");
    if (p.is_zero())
        return "0";

    auto append_power = [](std::string& out, std::string_view var, unsigned e) {
        out += var;
        if (e >= 2) {
            out += '^';
            out += std::to_string(e);
        }
    };

    std::string out;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const mpz_class& c = p.coeffs()[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class mag = abs(c);
        unsigned ea = static_cast<unsigned>(i);
        unsigned eb = n - ea;
        bool have_var = ea > 0 || eb > 0;
        bool need_coeff = mag != 1 || !have_var;
        if (need_coeff)
            append_decimal(out, mag);
        if (ea > 0) {
            if (need_coeff)
                out += '*';
            append_power(out, var_a, ea);
        }
        if (eb > 0) {
            if (need_coeff || ea > 0)
                out += '*';
            append_power(out, var_b, eb);
        }
    }
    return out;
}

} // namespace rsf
