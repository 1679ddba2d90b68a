#include "doctest.h"

#include "rsf/closedforms.hpp"
#include "test_support.hpp"

using rsf::IntPoly;
using rsf::parse_poly;

namespace {

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace

TEST_CASE("chebyshev recurrence ground cases") {
    CHECK(rsf::chebyshev_t(1) == IntPoly::x());
    CHECK(rsf::chebyshev_t(2) == IntPoly{-1, 0, 2});
    CHECK(rsf::chebyshev_t(3) == IntPoly{0, -3, 0, 4});
    CHECK_THROWS_AS(rsf::chebyshev_t(0), rsf::DomainError);
}

TEST_CASE("chebyshev leading coefficient is 2^(n-1)") {
    mpz_class expected = 1;
    for (unsigned n = 1; n <= 25; ++n) {
        IntPoly t = rsf::chebyshev_t(n);
        CHECK(t.degree() == static_cast<int>(n));
        CHECK(t.leading_coeff() == expected);
        expected *= 2;
    }
}

TEST_CASE("shifted chebyshev G") {
    CHECK(rsf::shifted_cheb_g(1) == IntPoly{2, 1});
    CHECK(rsf::shifted_cheb_g(2) == IntPoly{2, 4, 1});
    CHECK(rsf::shifted_cheb_g(3) - IntPoly::constant(2) == parse_poly("x^3 + 6*x^2 + 9*x"));
    for (unsigned n = 1; n <= 20; ++n)
        CHECK(rsf::shifted_cheb_g(n).is_monic());
}

TEST_CASE("forest polynomial closed form") {
    CHECK(rsf::forest_poly(1) == IntPoly::x());
    CHECK(rsf::forest_poly(5) == parse_poly("x^5 + 10*x^4 + 35*x^3 + 50*x^2 + 25*x"));
    CHECK(rsf::forest_poly(12) ==
          parse_poly("x^12 + 24*x^11 + 252*x^10 + 1520*x^9 + 5814*x^8 + 14688*x^7"
                     " + 24752*x^6 + 27456*x^5 + 19305*x^4 + 8008*x^3 + 1716*x^2 + 144*x"));
    for (unsigned n = 1; n <= 40; ++n) {
        IntPoly f = rsf::forest_poly(n);
        CHECK(f.is_monic());
        CHECK(f.degree() == static_cast<int>(n));
        CHECK(f.coeff(0) == 0);
    }
}

TEST_CASE("oriented forest polynomial is the binomial expansion") {
    CHECK(rsf::oriented_forest_poly(1) == IntPoly::x());
    CHECK(rsf::oriented_forest_poly(2) == IntPoly{0, 2, 1});
    for (unsigned n = 1; n <= 12; ++n) {
        IntPoly f = rsf::oriented_forest_poly(n);
        for (unsigned k = 0; k < n; ++k)
            CHECK(f.coeff(n - k) == binomial(n, k));
        CHECK(f.coeff(0) == 0);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(rsf::cyclotomic(1) == IntPoly{-1, 1});
    CHECK(rsf::cyclotomic(2) == IntPoly{1, 1});
    CHECK(rsf::cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(rsf::cyclotomic(6) == IntPoly{1, -1, 1});
    // prime index: 1 + x + ... + x^(p-1)
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
        IntPoly phi = rsf::cyclotomic(p);
        CHECK(phi.degree() == static_cast<int>(p - 1));
        for (unsigned k = 0; k < p; ++k)
            CHECK(phi.coeff(k) == 1);
        CHECK(phi.coeff(p) == 0);
    }
    for (unsigned n = 1; n <= 60; ++n)
        CHECK(rsf::cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
}

TEST_CASE("cyclotomic degrees of divisors sum to n") {
    for (unsigned n = 1; n <= 60; ++n) {
        int total = 0;
        for (unsigned d : rsf::divisors(n))
            total += rsf::cyclotomic(d).degree();
        CHECK(total == static_cast<int>(n));
    }
}

TEST_CASE("psi ground cases") {
    CHECK(rsf::psi(1) == IntPoly{-2, 1});
    CHECK(rsf::psi(2) == IntPoly{2, 1});
    CHECK(rsf::psi(3) == IntPoly{1, 1});
    CHECK(rsf::psi(5) == IntPoly{-1, 1, 1});
    CHECK(rsf::psi(12) == IntPoly{-3, 0, 1});
    // the squared factors of the n = 5 and n = 11 expansions
    IntPoly shift{2, 1};
    CHECK(rsf::compose(rsf::psi(5), shift) == parse_poly("x^2 + 5*x + 5"));
    CHECK(rsf::compose(rsf::psi(11), shift) ==
          parse_poly("x^5 + 11*x^4 + 44*x^3 + 77*x^2 + 55*x + 11"));
    for (unsigned n = 3; n <= 60; ++n) {
        CHECK(rsf::psi(n).degree() == static_cast<int>(euler_phi(n) / 2));
        CHECK(rsf::psi(n).is_monic());
    }
}

TEST_CASE("psi satisfies the defining identity with the cyclotomic polynomial") {
    // Phi_n(x) = x^d * Psi_n(x + 1/x) for d = phi(n)/2, rendered integrally as
    // Phi_n(x) = sum_k psi_k (x^2+1)^k x^(d-k).
    for (unsigned n = 3; n <= 40; ++n) {
        IntPoly p = rsf::psi(n);
        unsigned d = static_cast<unsigned>(p.degree());
        IntPoly x2p1{1, 0, 1};
        IntPoly sum;
        for (unsigned k = 0; k <= d; ++k)
            sum += p.coeff(k) * (rsf::pow(x2p1, k) * IntPoly::monomial(1, d - k));
        CHECK(sum == rsf::cyclotomic(n));
    }
}

TEST_CASE("c polynomial") {
    CHECK(rsf::c_poly(7) == IntPoly::x());
    CHECK(rsf::c_poly(8) == IntPoly{0, 4, 1});
    CHECK(rsf::c_poly(2) == rsf::forest_poly(2));
}

TEST_CASE("factored forest polynomial matches the direct construction") {
    CHECK(rsf::factored_forest_poly(1) == IntPoly::x());
    // x (x+3)^2 (x^3 + 6x^2 + 9x + 3)^2
    IntPoly expected9 = IntPoly::x() * rsf::pow(parse_poly("x + 3"), 2) *
                        rsf::pow(parse_poly("x^3 + 6*x^2 + 9*x + 3"), 2);
    CHECK(rsf::factored_forest_poly(9) == expected9);
    // x (x+4) (x^2+3x+1)^2 (x^2+5x+5)^2
    IntPoly expected10 = IntPoly::x() * parse_poly("x + 4") *
                         rsf::pow(parse_poly("x^2 + 3*x + 1"), 2) *
                         rsf::pow(parse_poly("x^2 + 5*x + 5"), 2);
    CHECK(rsf::factored_forest_poly(10) == expected10);
    for (unsigned n = 1; n <= 24; ++n)
        CHECK(rsf::factored_forest_poly(n) == rsf::forest_poly(n));
}

TEST_CASE("factored oriented polynomial matches the direct construction") {
    CHECK(rsf::factored_oriented_poly(1) == IntPoly::x());
    CHECK(rsf::factored_oriented_poly(2) == IntPoly{0, 2, 1});
    CHECK(rsf::factored_oriented_poly(6) == rsf::oriented_forest_poly(6));
    for (unsigned n = 1; n <= 24; ++n)
        CHECK(rsf::factored_oriented_poly(n) == rsf::oriented_forest_poly(n));
}

TEST_CASE("-2 is a root of the oriented polynomial exactly for even n") {
    for (unsigned n = 1; n <= 20; ++n) {
        bool is_root = rsf::eval_int(rsf::oriented_forest_poly(n), -2) == 0;
        CHECK(is_root == (n % 2 == 0));
    }
}

TEST_CASE("families compose multiplicatively and divide by index divisibility") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; n * m <= 16; ++m) {
            CHECK(rsf::compose(rsf::forest_poly(n), rsf::forest_poly(m)) ==
                  rsf::forest_poly(n * m));
            CHECK(rsf::compose(rsf::oriented_forest_poly(n), rsf::oriented_forest_poly(m)) ==
                  rsf::oriented_forest_poly(n * m));
        }
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned m = 1; m <= 12; ++m) {
            CHECK(rsf::divides(rsf::forest_poly(n), rsf::forest_poly(m)) == (m % n == 0));
            CHECK(rsf::divides(rsf::oriented_forest_poly(n), rsf::oriented_forest_poly(m)) ==
                  (m % n == 0));
        }
}
