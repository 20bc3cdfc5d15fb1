#ifndef MHPOLY_HILBERT_HPP
#define MHPOLY_HILBERT_HPP

#include <utility>

#include "mhpoly/moduli.hpp"
#include "mhpoly/plethystic.hpp"

namespace mhpoly {

/* Punctual-weight series W(y) = y + w2 y^2 + w3 y^3 + ... driving Cheah's
 * formula. For a surface (m = 2) the series is y/(1-xy) in full; for m > 2
 * only the y^2 and y^3 weights are known:
 *   w2 = x + ... + x^{m-1},  w3 = sum_{1<=i<=j<=m-1} x^{i+j}.
 * tate_twist substitutes t^2 uv for x (weight-tracked variant for MHPs).
 */
inline MultiPoly punctual_w2(int m, bool tate_twist = false) {
    Exponent x = tate_twist ? Exponent{2, 1, 1} : Exponent{0, 1, 1};
    MultiPoly w;
    for (int i = 1; i <= m - 1; ++i)
        w.add_term(x * i, 1);
    return w;
}

inline MultiPoly punctual_w3(int m, bool tate_twist = false) {
    Exponent x = tate_twist ? Exponent{2, 1, 1} : Exponent{0, 1, 1};
    MultiPoly w;
    for (int i = 1; i <= m - 1; ++i)
        for (int j = i; j <= m - 1; ++j)
            w.add_term(x * (i + j), 1);
    return w;
}

inline YSeries punctual_weights(int m, int N, bool tate_twist = false) {
    if (m < 2)
        throw spec_error("punctual_weights: dimension m must be >= 2");
    if (m > 2 && N > 3)
        throw spec_error("punctual_weights: weights beyond y^3 are only known for m = 2");
    Exponent x = tate_twist ? Exponent{2, 1, 1} : Exponent{0, 1, 1};
    YSeries w(N);
    if (N >= 1)
        w[1] = MultiPoly::one();
    if (N >= 2)
        w[2] = punctual_w2(m, tate_twist);
    if (N >= 3)
        w[3] = punctual_w3(m, tate_twist);
    for (int n = 4; n <= N; ++n) // m == 2 only
        w[n] = MultiPoly::monomial(x * (n - 1));
    return w;
}

// Hilbert E-series of a smooth surface: PExp(E_S y / (1 - uv y)).
inline YSeries he_surface(const MultiPoly& e_surface, int N) {
    if (e_surface.depends_on_t())
        throw spec_error("he_surface: E-polynomial must not depend on t");
    YSeries w = punctual_weights(2, N);
    return pexp(w * e_surface, false);
}

/* Poincare polynomial of Hilb^n(T*C), C elliptic, as the closed partition
 * sum: sum over partitions of n of
 *   ((t+1)/(t-1))^{l(lambda)} prod_{j: lambda_j>0} (t^{2 lambda_j} - 1) t^{2n-2|lambda|}
 * with l(lambda) the number of distinct part sizes.
 */
inline MultiPoly partition_poincare(int n) {
    if (n < 1)
        throw spec_error("partition_poincare: n must be >= 1");
    MultiPoly t = MultiPoly::var_t(), one = MultiPoly::one();
    MultiPoly sum;
    for (const Partition& lambda : partitions_of(n)) {
        int ell = lambda.num_distinct();
        MultiPoly numer = (t + one).pow(ell) *
                          MultiPoly::monomial({2 * n - 2 * lambda.num_parts(), 0, 0});
        for (int j = 1; j <= n; ++j)
            if (lambda.mult[static_cast<std::size_t>(j - 1)] > 0) {
                int lj = lambda.mult[static_cast<std::size_t>(j - 1)];
                numer *= MultiPoly::monomial({2 * lj, 0, 0}) - one;
            }
        sum += exact_div(numer, (t - one).pow(ell));
    }
    sum.assert_integral("partition_poincare");
    return sum;
}

/* Generating series of those Poincare polynomials:
 *   prod_{n>=1} (1 + y^n t^{2n-1})^2 / ((1 - y^n t^{2n-2})(1 - y^n t^{2n})).
 */
inline YSeries hilb_poincare_series(int N) {
    if (N < 1)
        throw spec_error("hilb_poincare_series: order must be >= 1");
    YSeries prod = YSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        YSeries numer = YSeries::one(N);
        numer[n] = MultiPoly::monomial({2 * n - 1, 0, 0});
        prod *= numer * numer;
        for (int e : {2 * n - 2, 2 * n}) {
            // (1 - y^n t^e)^{-1} as a geometric series
            YSeries inv(N);
            for (int k = 0; n * k <= N; ++k)
                inv[n * k] = MultiPoly::monomial({e * k, 0, 0});
            prod *= inv;
        }
    }
    return prod;
}

// E-polynomials of Hilb^2 and Hilb^3 of an m-dimensional X from E_X:
//   E_Hilb2 = f2 + (f1^2 + f1*)/2
//   E_Hilb3 = f3 + f1 f2 + f1^3/6 + (f1 f1*)/2 + f1**/3
// with f1 = E_X, f1* / f1** its Adams 2 / 3 images, f2 = E_X w2, f3 = E_X w3.
inline std::pair<MultiPoly, MultiPoly> hilb_e_23(const MultiPoly& e_x, int m) {
    if (e_x.depends_on_t())
        throw spec_error("hilb_e_23: E-polynomial must not depend on t");
    if (m < 2 || m % 2 != 0)
        throw spec_error("hilb_e_23: dimension m must be even and >= 2");
    MultiPoly f1 = e_x;
    MultiPoly f1s = f1.adams(2);
    MultiPoly f1ss = f1.adams(3);
    MultiPoly f2 = e_x * punctual_w2(m);
    MultiPoly f3 = e_x * punctual_w3(m);
    MultiPoly e2 = f2 + (f1 * f1 + f1s) * Rational(1, 2);
    MultiPoly e3 = f3 + f1 * f2 + f1.pow(3) * Rational(1, 6) + f1 * f1s * Rational(1, 2) +
                   f1ss * Rational(1, 3);
    e2.assert_integral("hilb_e_23 (n=2)");
    e3.assert_integral("hilb_e_23 (n=3)");
    return {e2, e3};
}

/* MHP-level analog of hilb_e_23: Tate-twisted weights (t^2 uv)^i and signed
 * Adams operations, so odd-degree classes symmetrize as exterior powers.
 */
inline std::pair<MultiPoly, MultiPoly> hilb_mu_23(const MultiPoly& mu_x, int m) {
    if (m < 2 || m % 2 != 0)
        throw spec_error("hilb_mu_23: dimension m must be even and >= 2");
    MultiPoly g1 = mu_x;
    MultiPoly g1s = g1.adams(2, true);
    MultiPoly g1ss = g1.adams(3, true);
    MultiPoly g2 = mu_x * punctual_w2(m, true);
    MultiPoly g3 = mu_x * punctual_w3(m, true);
    MultiPoly mu2 = g2 + (g1 * g1 + g1s) * Rational(1, 2);
    MultiPoly mu3 = g3 + g1 * g2 + g1.pow(3) * Rational(1, 6) + g1 * g1s * Rational(1, 2) +
                    g1ss * Rational(1, 3);
    mu2.assert_integral("hilb_mu_23 (n=2)");
    mu3.assert_integral("hilb_mu_23 (n=3)");
    return {mu2, mu3};
}

enum class EPMode { Pure, Round };

/* E-to-Poincare conversion for a smooth X of complex dimension D with pure
 * (or round) cohomology. The result must be an honest polynomial with
 * non-negative coefficients; anything else means the mode was wrong for X.
 */
inline MultiPoly poincare_from_e(const MultiPoly& e, int D, EPMode mode) {
    MultiPoly p = (mode == EPMode::Pure) ? e.pure_conversion(D) : e.round_conversion(D);
    for (const auto& [ex, c] : p.terms())
        if (c < 0)
            throw specialization_error("poincare_from_e: negative coefficient in result");
    return p;
}

/* A Hilbert-scheme desingularization Hilb^n of the GL_n moduli space over a
 * d-dimensional abelian variety. For d > 1 only n <= 3 carries known
 * punctual data; the resolution is crepant exactly when d = 1.
 */
struct ResolutionSpec {
    int n = 2;
    int d = 1;
    Space space = Space::Higgs;

    void validate() const {
        if (n < 1)
            throw spec_error("resolution: n must be >= 1");
        if (d < 1)
            throw spec_error("resolution: d must be >= 1");
        if (d > 1 && n > 3)
            throw spec_error("resolution: for d > 1 only n <= 3 is supported");
        if (space == Space::Bundles)
            throw spec_error("resolution: space must be higgs or char");
    }
};

struct ResolutionResult {
    MultiPoly e;       // E-polynomial of Hilb^n
    MultiPoly p;       // Poincare polynomial, in t
    Integer euler = 0; // P(-1)
    bool crepant = false;
    bool routes_agree = true; // both P-routes compared (Higgs side)
};

inline ResolutionResult resolution_outputs(const ResolutionSpec& spec) {
    spec.validate();
    BaseInputs base = base_inputs(spec.d);
    const bool higgs = spec.space == Space::Higgs;
    const MultiPoly& e_x = higgs ? base.e_higgs : base.e_char;
    const MultiPoly& mu_x = higgs ? base.mu_higgs : base.mu_char;

    MultiPoly e_hilb;
    MultiPoly p_mu;
    if (spec.n == 1) {
        e_hilb = e_x;
        p_mu = mu_x.at_u1v1();
    } else if (spec.d == 1) {
        // full surface series, any n
        e_hilb = he_surface(e_x, spec.n)[spec.n];
        YSeries w = punctual_weights(2, spec.n, true);
        YSeries mu_series = pexp(w * mu_x, true);
        mu_series.assert_integral("resolution_outputs (mu series)");
        p_mu = mu_series[spec.n].at_u1v1();
    } else {
        auto [e2, e3] = hilb_e_23(e_x, base.m);
        auto [mu2, mu3] = hilb_mu_23(mu_x, base.m);
        e_hilb = (spec.n == 2) ? e2 : e3;
        p_mu = ((spec.n == 2) ? mu2 : mu3).at_u1v1();
    }

    ResolutionResult res;
    res.e = e_hilb;
    res.crepant = (spec.d == 1);
    if (higgs) {
        MultiPoly p_pure = poincare_from_e(e_hilb, spec.n * 2 * spec.d, EPMode::Pure);
        if (p_pure != p_mu)
            throw route_disagreement_error(
                "resolution_outputs: pure E-to-P route disagrees with the mu route");
        res.p = p_pure;
    } else {
        res.p = p_mu;
    }
    Rational chi = res.p.eval_t(-1);
    res.euler = boost::multiprecision::numerator(chi);
    return res;
}

} // namespace mhpoly

#endif
