#include "rsf/closedforms.hpp"

#include <map>
#include <mutex>

namespace rsf {

namespace {

void require_positive(unsigned n, const char* what) {
    if (n == 0)
        throw DomainError(std::string(what) + " requires n >= 1");
}

// Process-wide memo for the divisor recursions; guarded for concurrent use.
std::mutex cache_mutex;
std::map<unsigned, IntPoly> cyclotomic_cache;
std::map<unsigned, IntPoly> psi_cache;

IntPoly cyclotomic_unlocked(unsigned n) {
    auto it = cyclotomic_cache.find(n);
    if (it != cyclotomic_cache.end())
        return it->second;

    // x^n - 1
    std::vector<mpz_class> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    IntPoly phi{IntPoly(std::move(c))};
    for (unsigned d : divisors(n))
        if (d < n)
            phi = exact_div(phi, cyclotomic_unlocked(d));
    cyclotomic_cache.emplace(n, phi);
    return phi;
}

IntPoly psi_unlocked(unsigned n) {
    auto it = psi_cache.find(n);
    if (it != psi_cache.end())
        return it->second;

    IntPoly result;
    if (n == 1) {
        result = IntPoly{-2, 1}; // x - 2, minimal polynomial of 2cos(0)
    } else if (n == 2) {
        result = IntPoly{2, 1}; // x + 2, minimal polynomial of 2cos(pi)
    } else {
        // Phi_n is palindromic of even degree 2d for n >= 3. Divide by x^d and
        // rewrite x^k + x^-k through V_0 = 2, V_1 = y, V_{k+1} = y*V_k - V_{k-1}:
        // Psi_n(y) = c_d + sum_{k=1..d} c_{d+k} * V_k(y).
        IntPoly phi = cyclotomic_unlocked(n);
        std::size_t d = static_cast<std::size_t>(phi.degree()) / 2;
        IntPoly v_prev = IntPoly::constant(2);
        IntPoly v_cur = IntPoly::x();
        result = IntPoly::constant(phi.coeff(d));
        for (std::size_t k = 1; k <= d; ++k) {
            result += phi.coeff(d + k) * v_cur;
            IntPoly v_next = IntPoly::x() * v_cur - v_prev;
            v_prev = std::move(v_cur);
            v_cur = std::move(v_next);
        }
    }
    psi_cache.emplace(n, result);
    return result;
}

} // namespace

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> low, high;
    for (unsigned d = 1; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d)
                high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

IntPoly chebyshev_t(unsigned n) {
    require_positive(n, "chebyshev_t");
    IntPoly t1 = IntPoly::x();
    if (n == 1)
        return t1;
    IntPoly t2{-1, 0, 2}; // 2x^2 - 1
    if (n == 2)
        return t2;
    IntPoly two_x{0, 2};
    for (unsigned k = 3; k <= n; ++k) {
        IntPoly next = two_x * t2 - t1;
        t1 = std::move(t2);
        t2 = std::move(next);
    }
    return t2;
}

IntPoly shifted_cheb_g(unsigned n) {
    require_positive(n, "shifted_cheb_g");
    IntPoly g1{2, 1}; // x + 2
    if (n == 1)
        return g1;
    IntPoly g2{2, 4, 1}; // (x+2)^2 - 2
    if (n == 2)
        return g2;
    IntPoly shift{2, 1};
    for (unsigned k = 3; k <= n; ++k) {
        IntPoly next = shift * g2 - g1;
        g1 = std::move(g2);
        g2 = std::move(next);
    }
    return g2;
}

IntPoly forest_poly(unsigned n) {
    return shifted_cheb_g(n) - IntPoly::constant(2);
}

IntPoly oriented_forest_poly(unsigned n) {
    require_positive(n, "oriented_forest_poly");
    // (x+1)^n - 1 through the binomial row; one pass, no repeated products.
    std::vector<mpz_class> c(n + 1);
    mpz_class binom = 1;
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = binom;
        binom *= n - k;
        binom /= k + 1;
    }
    c[0] -= 1;
    return IntPoly(std::move(c));
}

IntPoly cyclotomic(unsigned n) {
    require_positive(n, "cyclotomic");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_unlocked(n);
}

IntPoly psi(unsigned n) {
    require_positive(n, "psi");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return psi_unlocked(n);
}

IntPoly c_poly(unsigned n) {
    require_positive(n, "c_poly");
    return n % 2 == 1 ? IntPoly::x() : IntPoly{0, 4, 1};
}

IntPoly factored_forest_poly(unsigned n) {
    require_positive(n, "factored_forest_poly");
    IntPoly shift{2, 1}; // x + 2
    IntPoly result = c_poly(n);
    for (unsigned k : divisors(n)) {
        if (k <= 2)
            continue;
        IntPoly factor = compose(psi(k), shift);
        result *= factor * factor;
    }
    return result;
}

IntPoly factored_oriented_poly(unsigned n) {
    require_positive(n, "factored_oriented_poly");
    IntPoly shift{1, 1}; // x + 1
    IntPoly result = IntPoly::one();
    for (unsigned k : divisors(n))
        result *= compose(cyclotomic(k), shift);
    return result;
}

} // namespace rsf
