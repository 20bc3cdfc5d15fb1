#ifndef MHPOLY_MULTIPOLY_HPP
#define MHPOLY_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mhpoly/errors.hpp"

namespace mhpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent triple of a monomial t^t u^u v^v.
struct Exponent {
    int t = 0;
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;

    Exponent operator+(const Exponent& o) const { return {t + o.t, u + o.u, v + o.v}; }
    Exponent operator*(int k) const { return {t * k, u * k, v * k}; }
};

/* Exact sparse polynomial in t, u, v with rational coefficients.
 * Terms are kept in a std::map keyed lexicographically on (e_t, e_u, e_v),
 * so equal values are structurally equal and iteration order is canonical.
 * Zero coefficients are never stored.
 */
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        p.add_term({0, 0, 0}, c);
        return p;
    }
    static MultiPoly constant(long c) { return constant(Rational(c)); }
    static MultiPoly one() { return constant(1); }
    static MultiPoly monomial(Exponent e, const Rational& c = 1) {
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }
    static MultiPoly var_t() { return monomial({1, 0, 0}); }
    static MultiPoly var_u() { return monomial({0, 1, 0}); }
    static MultiPoly var_v() { return monomial({0, 0, 1}); }
    // x := uv
    static MultiPoly var_x() { return monomial({0, 1, 1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (c == 0)
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, cc] : terms_)
            cc *= c;
        return *this;
    }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    MultiPoly pow(int k) const {
        if (k < 0)
            throw error("MultiPoly::pow: negative exponent");
        MultiPoly r = one();
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1)
                r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    int degree_t() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            if (e.t > d)
                d = e.t;
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            if (e.t + e.u + e.v > d)
                d = e.t + e.u + e.v;
        return d;
    }

    bool depends_on_t() const {
        for (const auto& [e, c] : terms_)
            if (e.t != 0)
                return true;
        return false;
    }
    // True when u, v occur only through x = uv.
    bool is_in_x() const {
        for (const auto& [e, c] : terms_)
            if (e.u != e.v)
                return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (boost::multiprecision::denominator(c) != 1)
                return false;
        return true;
    }
    void assert_integral(const std::string& context) const {
        if (!is_integral())
            throw integrality_error(context + ": non-integer coefficient in result");
    }

    // Adams operation: t -> t^n, u -> u^n, v -> v^n. The signed variant
    // multiplies each term by (-1)^{e_t (n-1)} (t-degree carries parity).
    MultiPoly adams(int n, bool is_signed = false) const {
        if (n <= 0)
            throw error("adams: n must be positive");
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            Rational cc = c;
            if (is_signed && (e.t % 2) != 0 && (n - 1) % 2 != 0)
                cc = -cc;
            r.terms_.emplace(e * n, cc);
        }
        return r;
    }

    friend MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

    // --- specializations -------------------------------------------------

    // u = v = 1; result lives in t only.
    MultiPoly at_u1v1() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term({e.t, 0, 0}, c);
        return r;
    }

    // t = -1, u = v = 1 (Euler characteristic of a mixed Hodge polynomial).
    Rational at_tm1_u1v1() const {
        Rational s = 0;
        for (const auto& [e, c] : terms_)
            s += (e.t % 2 != 0) ? -c : c;
        return s;
    }

    // Evaluate a univariate-in-t polynomial at an integer point.
    Rational eval_t(const Rational& t0) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            if (e.u != 0 || e.v != 0)
                throw specialization_error("eval_t: polynomial is not univariate in t");
            Rational p = 1;
            for (int i = 0; i < e.t; ++i)
                p *= t0;
            s += c * p;
        }
        return s;
    }

    /* Pure conversion: t^{2D} f(-1/t, -1/t) for f = f(u,v).
     * A term c u^p v^q becomes c (-1)^{p+q} t^{2D-p-q}; a negative t-exponent
     * means f was not the E-polynomial of a pure space of dimension D.
     */
    MultiPoly pure_conversion(int D) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e.t != 0)
                throw specialization_error("pure-conversion: input depends on t");
            int et = 2 * D - e.u - e.v;
            if (et < 0)
                throw specialization_error(
                    "pure-conversion: negative exponent (purity violated at dimension " +
                    std::to_string(D) + ")");
            r.add_term({et, 0, 0}, ((e.u + e.v) % 2 != 0) ? -c : c);
        }
        return r;
    }

    /* Round conversion: (-t)^D f(x := -1/t) for f a polynomial in x = uv.
     * A term c x^k becomes c (-1)^{D+k} t^{D-k}.
     */
    MultiPoly round_conversion(int D) const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (e.t != 0 || e.u != e.v)
                throw specialization_error("round-conversion: input is not a polynomial in x=uv");
            int k = e.u;
            int et = D - k;
            if (et < 0)
                throw specialization_error(
                    "round-conversion: negative exponent (roundness violated at dimension " +
                    std::to_string(D) + ")");
            r.add_term({et, 0, 0}, ((D + k) % 2 != 0) ? -c : c);
        }
        return r;
    }

private:
    TermMap terms_;
};

/* Exact division: returns q with q * den == num, via the lex division
 * algorithm reducing only against the leading term of den. Any step where
 * the leading term of the remainder is not divisible signals inexactness.
 */
inline MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero())
        throw inexact_division_error("exact_div: division by zero");
    MultiPoly rem = num;
    MultiPoly q;
    const auto& lt_den = *den.terms_.rbegin(); // lex-largest term
    while (!rem.is_zero()) {
        const auto& lt_rem = *rem.terms_.rbegin();
        Exponent d{lt_rem.first.t - lt_den.first.t, lt_rem.first.u - lt_den.first.u,
                   lt_rem.first.v - lt_den.first.v};
        if (d.t < 0 || d.u < 0 || d.v < 0)
            throw inexact_division_error("exact_div: nonzero remainder");
        Rational c = lt_rem.second / lt_den.second;
        MultiPoly m = MultiPoly::monomial(d, c);
        q += m;
        rem -= m * den;
    }
    return q;
}

} // namespace mhpoly

#endif
