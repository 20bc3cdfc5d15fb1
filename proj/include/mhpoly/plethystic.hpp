#ifndef MHPOLY_PLETHYSTIC_HPP
#define MHPOLY_PLETHYSTIC_HPP

#include <vector>

#include "mhpoly/yseries.hpp"

namespace mhpoly {

namespace detail {

inline std::vector<int> moebius_upto(int n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> primes;
    for (int i = 2; i <= n; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (int p : primes) {
            long ip = static_cast<long>(i) * p;
            if (ip > n)
                break;
            composite[static_cast<std::size_t>(ip)] = true;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(ip)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(ip)] = -mu[static_cast<std::size_t>(i)];
        }
    }
    return mu;
}

// log of a series with constant coefficient 1.
inline YSeries series_log(const YSeries& g) {
    if (g[0] != MultiPoly::one())
        throw error("series_log: constant coefficient must be 1");
    const int N = g.order();
    YSeries u = g;
    u[0] = MultiPoly();
    YSeries acc(N);      // log so far
    YSeries upow = u;    // u^k
    for (int k = 1; k <= N; ++k) {
        YSeries term = upow * Rational(((k % 2) ? 1 : -1), k);
        acc += term;
        if (k < N)
            upow *= u;
    }
    return acc;
}

// exp of a series with zero constant coefficient.
inline YSeries series_exp(const YSeries& g) {
    if (!g[0].is_zero())
        throw error("series_exp: constant coefficient must be 0");
    const int N = g.order();
    YSeries acc = YSeries::one(N);
    YSeries term = YSeries::one(N);
    for (int k = 1; k <= N; ++k) {
        term *= g;
        term *= Rational(1, k);
        acc += term;
    }
    return acc;
}

} // namespace detail

/* Plethystic exponential: exp(sum_{n>=1} adams(f, n)/n), truncated at the
 * series order. The signed flavour uses the signed Adams operation, which
 * models symmetric powers of graded-commutative cohomology (odd t-degree
 * generators contribute exterior powers).
 */
inline YSeries pexp(const YSeries& f, bool is_signed = false) {
    if (!f[0].is_zero())
        throw error("pexp: input must have zero coefficient at y^0");
    const int N = f.order();
    YSeries g(N);
    for (int n = 1; n <= N; ++n) {
        YSeries a = f.adams(n, is_signed);
        a *= Rational(1, n);
        g += a;
    }
    return detail::series_exp(g);
}

/* Product-form plethystic exponential: for each monomial c m y^n of f,
 * multiply in (1 - m y^n)^{-c} (even t-degree) or (1 + m y^n)^{c} (odd
 * t-degree, signed). Slower; used as the oracle for pexp.
 */
inline YSeries pexp_product(const YSeries& f, bool is_signed = false) {
    if (!f[0].is_zero())
        throw error("pexp_product: input must have zero coefficient at y^0");
    const int N = f.order();
    YSeries result = YSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        for (const auto& [e, c] : f[n].terms()) {
            if (boost::multiprecision::denominator(c) != 1)
                throw integrality_error("pexp_product: input must have integer coefficients");
            Integer ci = boost::multiprecision::numerator(c);
            bool odd = is_signed && (e.t % 2 != 0);
            long count_mag = ci.convert_to<long>();
            bool negate_exp = count_mag < 0;
            if (negate_exp)
                count_mag = -count_mag;
            // factor = (1 -/+ m y^n)^{-1} expanded geometrically, or its inverse
            YSeries base(N);
            base[0] = MultiPoly::one();
            MultiPoly mono = MultiPoly::monomial(e);
            if (odd) {
                // (1 + m y^n): exterior algebra on one odd generator
                if (n <= N)
                    base[n] = mono;
            } else {
                // (1 - m y^n)^{-1} = 1 + m y^n + m^2 y^{2n} + ...
                for (int k = 1; n * k <= N; ++k)
                    base[n * k] = mono.pow(k);
            }
            YSeries factor = negate_exp ? base.inverse() : base;
            for (long k = 0; k < count_mag; ++k)
                result *= factor;
        }
    }
    return result;
}

/* Plethystic logarithm, the inverse of pexp, via Moebius inversion of the
 * Adams sum applied to log.
 */
inline YSeries plog(const YSeries& g, bool is_signed = false) {
    if (g[0] != MultiPoly::one())
        throw error("plog: input must have constant term 1 at y^0");
    const int N = g.order();
    YSeries h = detail::series_log(g);
    std::vector<int> mu = detail::moebius_upto(N);
    YSeries f(N);
    for (int n = 1; n <= N; ++n) {
        if (mu[static_cast<std::size_t>(n)] == 0)
            continue;
        YSeries a = h.adams(n, is_signed);
        a *= Rational(mu[static_cast<std::size_t>(n)], n);
        f += a;
    }
    return f;
}

} // namespace mhpoly

#endif
