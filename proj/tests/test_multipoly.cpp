#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mhpoly/json_io.hpp"
#include "mhpoly/multipoly.hpp"
#include "mhpoly/yseries.hpp"

using namespace mhpoly;

namespace {

const MultiPoly one = MultiPoly::one();
const MultiPoly t = MultiPoly::var_t();
const MultiPoly u = MultiPoly::var_u();
const MultiPoly v = MultiPoly::var_v();
const MultiPoly x = MultiPoly::var_x();

MultiPoly random_poly(std::mt19937& rng, int terms = 4, int maxdeg = 3) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coeff(-5, 5);
    MultiPoly p;
    for (int i = 0; i < terms; ++i)
        p.add_term({deg(rng), deg(rng), deg(rng)}, coeff(rng));
    return p;
}

} // namespace

TEST_CASE("ring arithmetic basics") {
    CHECK((one + t * u) * (one + t * v) == one + t * u + t * v + t * t * u * v);
    CHECK((one + t).pow(0) == one);
    CHECK((one + t * u * v).pow(2) ==
          one + Rational(2) * t * u * v + t.pow(2) * u.pow(2) * v.pow(2));
}

TEST_CASE("zero coefficients are never stored") {
    MultiPoly p = t - t;
    CHECK(p.is_zero());
    CHECK(p.num_terms() == 0);
    MultiPoly q = (one + t) * (one - t);
    CHECK(q == one - t.pow(2));
    CHECK(q.num_terms() == 2);
}

TEST_CASE("exact division") {
    CHECK(exact_div((one + x).pow(2), one + x) == one + x);
    CHECK(exact_div(one - x.pow(2), one + x) == one - x);
    CHECK(exact_div(one + x.pow(3), one + x) == one - x + x.pow(2));
    CHECK_THROWS_AS(exact_div(one + x, x), inexact_division_error);
    CHECK_THROWS_AS(exact_div(one, MultiPoly()), inexact_division_error);
}

TEST_CASE("exact_div inverts multiplication on random inputs") {
    std::mt19937 rng(42);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        if (a.is_zero() || b.is_zero())
            continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("adams operations") {
    CHECK((u * v).adams(2) == u.pow(2) * v.pow(2));
    // signed Adams on a square of odd generators
    CHECK((one + t).pow(2).adams(2, true) == (one - t.pow(2)).pow(2));
    CHECK((one + t).pow(2).adams(3, true) == (one + t.pow(3)).pow(2));
}

TEST_CASE("adams is multiplicative") {
    std::mt19937 rng(11);
    for (int i = 0; i < 15; ++i) {
        MultiPoly f = random_poly(rng), g = random_poly(rng);
        for (bool s : {false, true})
            for (int n : {2, 3})
                CHECK((f * g).adams(n, s) == f.adams(n, s) * g.adams(n, s));
    }
}

TEST_CASE("specializations") {
    CHECK((one + t * u + t * v + t.pow(2) * u * v).at_u1v1() == (one + t).pow(2));

    for (int d : {1, 2, 3}) {
        MultiPoly e = x.pow(d) * (u - one).pow(d) * (v - one).pow(d);
        CHECK(e.pure_conversion(2 * d) == (one + t).pow(2 * d));
    }
    for (int r : {1, 2, 5}) {
        CHECK((x - one).pow(r).round_conversion(r) == (one + t).pow(r));
    }
    CHECK(one.pure_conversion(0) == one);
}

TEST_CASE("specialization errors") {
    // not a polynomial in x = uv
    CHECK_THROWS_AS(u.round_conversion(1), specialization_error);
    // purity violation: degree too high for claimed dimension
    CHECK_THROWS_AS((u.pow(2) * v.pow(2)).pure_conversion(1), specialization_error);
    CHECK_THROWS_AS((x.pow(3)).round_conversion(1), specialization_error);
    CHECK_THROWS_AS(t.pure_conversion(2), specialization_error);
}

TEST_CASE("pure conversion is dual to the compactly supported Poincare polynomial") {
    // For pure E of a smooth X of complex dimension D: P^c(t) = E(-t,-t)
    // and Poincare duality gives P^c(t) = t^{2D} P(1/t).
    for (int d : {1, 2}) {
        MultiPoly e = x.pow(d) * (u - one).pow(d) * (v - one).pow(d);
        int D = 2 * d;
        MultiPoly p = e.pure_conversion(D); // (1+t)^{2d}
        MultiPoly p_c;                      // E(-t,-t)
        for (const auto& [ex, c] : e.terms())
            p_c.add_term({ex.u + ex.v, 0, 0}, ((ex.u + ex.v) % 2 != 0) ? -c : c);
        MultiPoly reversed;
        for (const auto& [ex, c] : p.terms())
            reversed.add_term({2 * D - ex.t, 0, 0}, c);
        CHECK(reversed == p_c);
    }
}

TEST_CASE("euler specialization") {
    CHECK((one + t * u * v).pow(2).at_tm1_u1v1() == 0);
    CHECK((one + t.pow(2) * u.pow(2) * v.pow(2)).at_tm1_u1v1() == 2);
}

TEST_CASE("yseries order discipline") {
    YSeries a(4), b(5);
    CHECK_THROWS_AS(a + b, order_mismatch_error);
    CHECK_THROWS_AS(a * b, order_mismatch_error);
}

TEST_CASE("yseries truncated arithmetic") {
    // (1 - y)^{-1} * (1 - y) == 1 up to order
    YSeries g(6);
    g[0] = one;
    g[1] = -one;
    YSeries inv = g.inverse();
    for (int k = 0; k <= 6; ++k)
        CHECK(inv[k] == one);
    CHECK(g * inv == YSeries::one(6));
}

TEST_CASE("yseries adams truncates at order") {
    YSeries f(5);
    f[2] = u * v;
    YSeries a = f.adams(2);
    CHECK(a[4] == u.pow(2) * v.pow(2));
    YSeries b = f.adams(3); // 2*3 > 5: drops out
    for (int k = 0; k <= 5; ++k)
        CHECK(b[k].is_zero());
}

TEST_CASE("json round trip") {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(poly_from_json(to_json(p)) == p);
    }
    YSeries s(3);
    s[1] = u * v;
    s[2] = -t * u;
    CHECK(series_from_json(to_json(s)) == s);
}

TEST_CASE("json rejects rational coefficients") {
    MultiPoly p = one * Rational(1, 2);
    CHECK_THROWS_AS(to_json(p), integrality_error);
}

TEST_CASE("json coefficients are decimal strings") {
    MultiPoly p;
    Integer big("123456789012345678901234567890");
    p.add_term({1, 0, 0}, Rational(big));
    json j = to_json(p);
    CHECK(j["terms"][0]["c"] == "123456789012345678901234567890");
    CHECK(poly_from_json(j) == p);
}
