#ifndef MHPOLY_YSERIES_HPP
#define MHPOLY_YSERIES_HPP

#include <vector>

#include "mhpoly/multipoly.hpp"

namespace mhpoly {

/* Truncated power series in y with MultiPoly coefficients. The truncation
 * order N is fixed at construction; degrees > N are never consulted.
 * Series of different orders never mix.
 */
class YSeries {
public:
    explicit YSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 1)
            throw error("YSeries: order must be positive");
    }

    static YSeries one(int order) {
        YSeries s(order);
        s.coeffs_[0] = MultiPoly::one();
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const MultiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    MultiPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    friend bool operator==(const YSeries&, const YSeries&) = default;

    YSeries& operator+=(const YSeries& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k)
            coeffs_[static_cast<std::size_t>(k)] += o[k];
        return *this;
    }
    YSeries& operator-=(const YSeries& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k)
            coeffs_[static_cast<std::size_t>(k)] -= o[k];
        return *this;
    }
    friend YSeries operator+(YSeries a, const YSeries& b) { return a += b; }
    friend YSeries operator-(YSeries a, const YSeries& b) { return a -= b; }

    friend YSeries operator*(const YSeries& a, const YSeries& b) {
        a.check_order(b);
        YSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a[i].is_zero())
                continue;
            for (int j = 0; i + j <= a.order(); ++j) {
                if (b[j].is_zero())
                    continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
    YSeries& operator*=(const YSeries& o) { return *this = *this * o; }

    YSeries& operator*=(const Rational& c) {
        for (auto& p : coeffs_)
            p *= c;
        return *this;
    }
    friend YSeries operator*(YSeries a, const Rational& c) { return a *= c; }

    YSeries& operator*=(const MultiPoly& p) {
        for (auto& q : coeffs_)
            q *= p;
        return *this;
    }
    friend YSeries operator*(YSeries a, const MultiPoly& p) { return a *= p; }

    YSeries pow(int k) const {
        if (k < 0)
            throw error("YSeries::pow: negative exponent");
        YSeries r = one(order());
        YSeries base = *this;
        while (k > 0) {
            if (k & 1)
                r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    // Adams operation: y -> y^n on top of the coefficient-level substitution.
    YSeries adams(int n, bool is_signed = false) const {
        if (n <= 0)
            throw error("adams: n must be positive");
        YSeries r(order());
        for (int k = 0; k <= order(); ++k) {
            if (coeffs_[static_cast<std::size_t>(k)].is_zero())
                continue;
            long kk = static_cast<long>(k) * n;
            if (kk > order())
                break;
            r[static_cast<int>(kk)] = coeffs_[static_cast<std::size_t>(k)].adams(n, is_signed);
        }
        return r;
    }

    // Multiplicative inverse; requires constant coefficient 1.
    YSeries inverse() const {
        if (coeffs_[0] != MultiPoly::one())
            throw error("YSeries::inverse: constant coefficient must be 1");
        YSeries r(order());
        r[0] = MultiPoly::one();
        for (int k = 1; k <= order(); ++k) {
            MultiPoly s;
            for (int j = 1; j <= k; ++j)
                s += coeffs_[static_cast<std::size_t>(j)] * r[k - j];
            r[k] = -s;
        }
        return r;
    }

    bool is_integral() const {
        for (const auto& p : coeffs_)
            if (!p.is_integral())
                return false;
        return true;
    }
    void assert_integral(const std::string& context) const {
        for (const auto& p : coeffs_)
            p.assert_integral(context);
    }

private:
    void check_order(const YSeries& o) const {
        if (order() != o.order())
            throw order_mismatch_error("YSeries: combining series of orders " +
                                       std::to_string(order()) + " and " +
                                       std::to_string(o.order()));
    }

    std::vector<MultiPoly> coeffs_;
};

} // namespace mhpoly

#endif
