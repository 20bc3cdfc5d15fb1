#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhpoly/plethystic.hpp"

using namespace mhpoly;

namespace {

const MultiPoly one = MultiPoly::one();
const MultiPoly t = MultiPoly::var_t();
const MultiPoly u = MultiPoly::var_u();
const MultiPoly v = MultiPoly::var_v();
const MultiPoly x = MultiPoly::var_x();

YSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> deg(0, 2), coeff(-3, 3), ydeg(1, 3);
    YSeries f(order);
    for (int i = 0; i < 3; ++i)
        f[ydeg(rng)].add_term({deg(rng), deg(rng), deg(rng)}, coeff(rng));
    return f;
}

/* Functional-inversion oracle for plog: solve pexp(f) = g coefficient by
 * coefficient in the y-degree. Independent of the Moebius route.
 */
YSeries plog_by_inversion(const YSeries& g, bool is_signed) {
    const int N = g.order();
    YSeries f(N);
    for (int k = 1; k <= N; ++k) {
        YSeries e = pexp(f, is_signed);
        f[k] += g[k] - e[k];
    }
    return f;
}

} // namespace

TEST_CASE("pexp of y is the full homogeneous series") {
    YSeries f(8);
    f[1] = one;
    YSeries g = pexp(f);
    for (int k = 0; k <= 8; ++k)
        CHECK(g[k] == one);
}

TEST_CASE("pexp of uv y") {
    YSeries f(6);
    f[1] = u * v;
    YSeries g = pexp(f);
    for (int k = 0; k <= 6; ++k)
        CHECK(g[k] == (u * v).pow(k));
}

TEST_CASE("pexp of -y is 1 - y") {
    YSeries f(8);
    f[1] = -one;
    YSeries g = pexp(f);
    CHECK(g[0] == one);
    CHECK(g[1] == -one);
    for (int k = 2; k <= 8; ++k)
        CHECK(g[k].is_zero());
}

TEST_CASE("signed pexp models Sym of odd cohomology") {
    YSeries f(4);
    f[1] = (one + t).pow(2);
    MultiPoly sym2 = pexp(f, true)[2];
    CHECK(sym2 == ((one + t).pow(4) + (one - t.pow(2)).pow(2)) * Rational(1, 2));
    CHECK(sym2 ==
          one + Rational(2) * t + Rational(2) * t.pow(2) + Rational(2) * t.pow(3) + t.pow(4));
}

TEST_CASE("plog inverts the geometric series") {
    YSeries g(8);
    for (int k = 0; k <= 8; ++k)
        g[k] = one; // 1/(1-y) truncated
    YSeries f = plog(g);
    CHECK(f[1] == one);
    for (int k = 2; k <= 8; ++k)
        CHECK(f[k].is_zero());
}

TEST_CASE("plog of the punctual surface series") {
    // PLog of prod_{n>=1} (1 - x^{n-1} y^n)^{-1} is y/(1-xy)
    const int N = 8;
    YSeries prod = YSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        YSeries geo(N);
        for (int k = 0; n * k <= N; ++k)
            geo[n * k] = x.pow((n - 1) * k);
        prod *= geo;
    }
    YSeries f = plog(prod);
    for (int n = 1; n <= N; ++n)
        CHECK(f[n] == x.pow(n - 1));
}

TEST_CASE("round trips on random series") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        YSeries f = random_series(rng, 12);
        bool is_signed = trial % 2 == 1;
        YSeries g = pexp(f, is_signed);
        CHECK(plog(g, is_signed) == f);
        CHECK(pexp(plog(g, is_signed), is_signed) == g);
    }
}

TEST_CASE("explicit round trip example") {
    YSeries f(8);
    f[1] = one + Rational(2) * t * u + t.pow(2) * u * v;
    CHECK(plog(pexp(f)) == f);
}

TEST_CASE("pexp is additive to multiplicative") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        YSeries f1 = random_series(rng, 8), f2 = random_series(rng, 8);
        for (bool s : {false, true})
            CHECK(pexp(f1 + f2, s) == pexp(f1, s) * pexp(f2, s));
    }
}

TEST_CASE("signed and plain pexp agree on even t-degrees") {
    YSeries f(8);
    f[1] = t.pow(2) * u + one;
    f[2] = -t.pow(4);
    CHECK(pexp(f, true) == pexp(f, false));
}

TEST_CASE("exp form agrees with product form") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        YSeries f = random_series(rng, 8);
        for (bool s : {false, true})
            CHECK(pexp(f, s) == pexp_product(f, s));
    }
    // single positive monomial: the product form is the literal Euler product
    YSeries f(10);
    f[2] = x.pow(2) * Rational(3);
    CHECK(pexp(f) == pexp_product(f));
}

TEST_CASE("moebius plog agrees with functional inversion") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        YSeries g = pexp(random_series(rng, 8), trial % 2 == 1);
        bool is_signed = trial % 2 == 1;
        CHECK(plog(g, is_signed) == plog_by_inversion(g, is_signed));
    }
}

TEST_CASE("constant term preconditions") {
    YSeries f(4);
    f[0] = one;
    CHECK_THROWS(pexp(f));
    YSeries g(4); // constant term 0, not 1
    CHECK_THROWS(plog(g));
}
