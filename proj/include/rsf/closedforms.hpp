#ifndef RSF_CLOSEDFORMS_HPP
#define RSF_CLOSEDFORMS_HPP

#include "rsf/intpoly.hpp"

namespace rsf {

// Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t). Leading
// coefficient 2^(n-1). pre: n >= 1.
IntPoly chebyshev_t(unsigned n);

// G_n(x) = 2*T_n((x+2)/2), computed integrally through the recurrence
// G_1 = x+2, G_2 = (x+2)^2 - 2, G_{n+2} = (x+2)*G_{n+1} - G_n. Monic of
// degree n. pre: n >= 1.
IntPoly shifted_cheb_g(unsigned n);

// Weighted rooted-spanning-forest sum of the sunlet graph with pendant
// weight x and cycle weight 1: F_n(x) = G_n(x) - 2. Monic, degree n, zero
// constant term. pre: n >= 1.
IntPoly forest_poly(unsigned n);

// Oriented counterpart: (x+1)^n - 1. pre: n >= 1.
IntPoly oriented_forest_poly(unsigned n);

// n-th cyclotomic polynomial, via the exact divisor recursion
// Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d(x). Memoized. pre: n >= 1.
IntPoly cyclotomic(unsigned n);

// Minimal polynomial of 2*cos(2*pi/n): Psi_1 = x-2, Psi_2 = x+2, and for
// n >= 3 the monic degree-phi(n)/2 polynomial with
// Phi_n(x) = x^(phi(n)/2) * Psi_n(x + 1/x). Memoized. pre: n >= 1.
IntPoly psi(unsigned n);

// x for odd n, x^2 + 4x for even n; the rational-root part of forest_poly.
IntPoly c_poly(unsigned n);

// F_n rebuilt from its factorization c_n(x) * prod_{k|n, k>2} Psi_k(x+2)^2.
IntPoly factored_forest_poly(unsigned n);

// (x+1)^n - 1 rebuilt as prod_{k|n} Phi_k(x+1).
IntPoly factored_oriented_poly(unsigned n);

// Ascending divisor list; helper shared by the factored constructors.
std::vector<unsigned> divisors(unsigned n);

} // namespace rsf

#endif
