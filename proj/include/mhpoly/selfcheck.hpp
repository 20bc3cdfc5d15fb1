#ifndef MHPOLY_SELFCHECK_HPP
#define MHPOLY_SELFCHECK_HPP

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mhpoly/hilbert.hpp"

namespace mhpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail; // failure explanation, empty on pass
};

// Test hook: lets a fault-injection test corrupt tables before the Molien
// oracle comparison runs.
using TableHook = std::function<void(WeylTable&)>;

namespace detail {

inline MultiPoly poly_t(std::initializer_list<long> coeffs) {
    MultiPoly p;
    int k = 0;
    for (long c : coeffs)
        p.add_term({k++, 0, 0}, c);
    return p;
}

inline std::vector<GroupSpec> specs_up_to(int gl_max, int signed_max) {
    std::vector<GroupSpec> specs;
    for (int n = 1; n <= gl_max; ++n) {
        specs.push_back({Family::GL, n});
        specs.push_back({Family::SL, n});
    }
    for (int n = 1; n <= signed_max; ++n) {
        specs.push_back({Family::SOodd, n});
        specs.push_back({Family::Sp, n});
        if (n >= 2)
            specs.push_back({Family::SOeven, n});
    }
    return specs;
}

// Molien average computed directly from an element list; oracle for
// molien_average over a class table.
inline MultiPoly molien_by_enumeration(const GroupSpec& spec,
                                       const std::vector<MolienFactor>& factors) {
    auto elements = enumerate_elements(spec);
    MultiPoly sum;
    for (const auto& w : elements) {
        XPoly cp = charpoly_of_matrix(w);
        if (spec.family == Family::SL)
            cp = xpoly_div_1px(cp);
        MultiPoly prod = MultiPoly::one();
        for (const MolienFactor& f : factors)
            prod *= xpoly_substitute(cp, f.monomial).pow(f.exponent);
        sum += prod;
    }
    sum *= Rational(Integer(1), Integer(elements.size()));
    return sum;
}

inline MultiPoly random_surface_e(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 2), coeff(-3, 3);
    MultiPoly e;
    for (int i = 0; i < 4; ++i)
        e.add_term({0, deg(rng), deg(rng)}, coeff(rng));
    return e;
}

} // namespace detail

/* The full oracle suite. Each entry exercises one acceptance-style
 * identity end to end and reports pass/fail with its runtime.
 */
inline std::vector<CheckResult> run_selfcheck(const TableHook& tamper = {}) {
    std::vector<CheckResult> results;
    auto run = [&](const std::string& name, auto&& body) {
        CheckResult r;
        r.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            std::string detail = body();
            r.pass = detail.empty();
            r.detail = detail;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    };

    run("crepant-resolution-partition-formula", [&]() -> std::string {
        YSeries series = hilb_poincare_series(12);
        for (int n = 1; n <= 12; ++n)
            if (partition_poincare(n) != series[n])
                return "partition sum differs from product expansion at n=" + std::to_string(n);
        if (partition_poincare(1) != detail::poly_t({1, 2, 1}))
            return "n=1 value is not (1+t)^2";
        if (partition_poincare(2) != detail::poly_t({1, 2, 3, 4, 2}))
            return "n=2 value mismatch";
        if (partition_poincare(3) != detail::poly_t({1, 2, 3, 6, 9, 8, 3}))
            return "n=3 value mismatch";
        return {};
    });

    run("character-base-matches-elliptic", [&]() -> std::string {
        const int N = 5;
        MultiPoly mu_char = base_inputs(1).mu_char;
        YSeries w = punctual_weights(2, N, true);
        YSeries series = pexp(w * mu_char, true);
        for (int n = 1; n <= N; ++n)
            if (series[n].at_u1v1() != partition_poincare(n))
                return "mu-route P differs from partition formula at n=" + std::to_string(n);
        return {};
    });

    run("higgs-character-common-poincare", [&]() -> std::string {
        for (const GroupSpec& g : detail::specs_up_to(4, 4))
            for (int d = 1; d <= 3; ++d) {
                ModuliSpec higgs{g, d, Space::Higgs, {}};
                ModuliSpec ch{g, d, Space::Character, {}};
                if (mhp_higgs(higgs).at_u1v1() != mhp_character(ch).at_u1v1())
                    return "u=v=1 specializations differ for " + family_name(g.family) + "(" +
                           std::to_string(g.n) + "), d=" + std::to_string(d);
            }
        return {};
    });

    run("molien-vs-enumeration", [&]() -> std::string {
        std::vector<std::vector<MolienFactor>> factor_sets = {
            {{Exponent{1, 1, 1}, 2}},
            {{Exponent{1, 1, 0}, 1}, {Exponent{1, 0, 1}, 1}},
        };
        for (const GroupSpec& g : detail::specs_up_to(6, 4)) {
            WeylTable table = class_table(g);
            if (tamper)
                tamper(table);
            for (const auto& factors : factor_sets)
                if (molien_average(table, factors) != detail::molien_by_enumeration(g, factors))
                    return "class table disagrees with element enumeration for " +
                           family_name(g.family) + "(" + std::to_string(g.n) + ")";
        }
        return {};
    });

    run("class-table-sanity", [&]() -> std::string {
        for (const GroupSpec& g : detail::specs_up_to(10, 8)) {
            WeylTable table = class_table(g);
            Integer total = 0;
            bool identity_found = false;
            XPoly identity_cp{Integer(1)};
            for (int i = 0; i < g.rank(); ++i)
                identity_cp = xpoly_mul(identity_cp, XPoly{Integer(1), Integer(1)});
            for (const ClassDatum& cd : table.classes) {
                total += cd.size;
                if (cd.size == 1 && cd.charpoly == identity_cp)
                    identity_found = true;
            }
            if (total != g.weyl_order())
                return "class sizes do not sum to |W| for " + family_name(g.family) + "(" +
                       std::to_string(g.n) + ")";
            if (!identity_found)
                return "identity class with charpoly (1+x)^r missing for " +
                       family_name(g.family) + "(" + std::to_string(g.n) + ")";
        }
        return {};
    });

    run("symmetric-product-model", [&]() -> std::string {
        for (int d = 1; d <= 2; ++d) {
            MultiPoly mu_x = base_inputs(d).mu_higgs;
            YSeries f(4);
            f[1] = mu_x;
            YSeries sym = pexp(f, true);
            for (int n = 1; n <= 4; ++n) {
                ModuliSpec spec{{Family::GL, n}, d, Space::Higgs, {}};
                if (mhp_higgs(spec) != sym[n])
                    return "Weyl average differs from Sym^n model at GL(" + std::to_string(n) +
                           "), d=" + std::to_string(d);
            }
        }
        return {};
    });

    run("plethystic-round-trips", [&]() -> std::string {
        const int N = 12;
        std::mt19937 rng(20260824);
        std::uniform_int_distribution<int> deg(0, 2), coeff(-3, 3), ydeg(1, 3);
        for (int trial = 0; trial < 100; ++trial) {
            YSeries f(N);
            for (int i = 0; i < 3; ++i)
                f[ydeg(rng)].add_term({deg(rng), deg(rng), deg(rng)}, coeff(rng));
            bool is_signed = trial % 2 == 1;
            if (plog(pexp(f, is_signed), is_signed) != f)
                return "plog(pexp(f)) != f at trial " + std::to_string(trial);
        }
        // exp form vs product form on single monomials
        for (auto [et, eu, ev, n, c] :
             {std::array<int, 5>{0, 1, 1, 1, 1}, {2, 1, 0, 2, 3}, {1, 1, 1, 1, 2},
              {0, 2, 1, 2, -2}, {3, 0, 0, 3, 1}}) {
            YSeries f(8);
            f[n] = MultiPoly::monomial({et, eu, ev}, c);
            for (bool is_signed : {false, true})
                if (pexp(f, is_signed) != pexp_product(f, is_signed))
                    return "exp-form and product-form pexp differ on a monomial input";
        }
        return {};
    });

    run("surface-consistency", [&]() -> std::string {
        std::mt19937 rng(7);
        std::vector<MultiPoly> inputs = {base_inputs(1).e_higgs, base_inputs(1).e_char,
                                         detail::random_surface_e(rng)};
        for (const MultiPoly& e_s : inputs) {
            auto [e2, e3] = hilb_e_23(e_s, 2);
            YSeries series = he_surface(e_s, 3);
            if (e2 != series[2] || e3 != series[3])
                return "hilb_e_23 with m=2 differs from the surface series";
        }
        return {};
    });

    run("higgs-dual-route", [&]() -> std::string {
        for (int n : {2, 3})
            for (int d = 1; d <= 3; ++d) {
                ResolutionResult r = resolution_outputs({n, d, Space::Higgs});
                if (!r.routes_agree)
                    return "route disagreement at n=" + std::to_string(n) +
                           ", d=" + std::to_string(d);
            }
        return {};
    });

    run("euler-and-degree", [&]() -> std::string {
        for (int n = 1; n <= 4; ++n)
            for (int d = 1; d <= 3; ++d)
                if (euler_moduli({{Family::GL, n}, d, Space::Character, {}}) != 0)
                    return "nonzero Euler characteristic for GL(" + std::to_string(n) +
                           "), d=" + std::to_string(d);
        for (int n : {2, 3})
            for (int d = 1; d <= 3; ++d)
                for (Space s : {Space::Higgs, Space::Character})
                    if (resolution_outputs({n, d, s}).euler != 0)
                        return "nonzero Euler characteristic for a resolution output";
        for (const GroupSpec& g : detail::specs_up_to(3, 3))
            for (int d = 1; d <= 2; ++d) {
                MultiPoly mu = mhp_character({g, d, Space::Character, {}});
                if (mu.degree_t() != 2 * d * g.rank())
                    return "deg_t of the character MHP is not 2dr for " +
                           family_name(g.family) + "(" + std::to_string(g.n) + ")";
            }
        return {};
    });

    run("hand-derived-anchors", [&]() -> std::string {
        MultiPoly s = MultiPoly::var_t() * MultiPoly::var_u() * MultiPoly::var_v();
        MultiPoly one = MultiPoly::one();
        MultiPoly expected_char =
            one + Rational(2) * s + Rational(2) * s.pow(2) + Rational(2) * s.pow(3) + s.pow(4);
        if (mhp_character({{Family::GL, 2}, 1, Space::Character, {}}) != expected_char)
            return "GL(2), d=1 character MHP anchor mismatch";
        MultiPoly expected_higgs;
        expected_higgs.add_term({0, 0, 0}, 1);
        expected_higgs.add_term({1, 1, 0}, 1);
        expected_higgs.add_term({1, 0, 1}, 1);
        expected_higgs.add_term({2, 1, 1}, 2);
        expected_higgs.add_term({3, 2, 1}, 1);
        expected_higgs.add_term({3, 1, 2}, 1);
        expected_higgs.add_term({4, 2, 2}, 1);
        if (mhp_higgs({{Family::GL, 2}, 1, Space::Higgs, {}}) != expected_higgs)
            return "GL(2), d=1 Higgs MHP anchor mismatch";
        MultiPoly x = MultiPoly::var_x();
        MultiPoly expected_e2 = x.pow(4) - x.pow(3) - x + one;
        if (hilb_e_23(base_inputs(1).e_char, 2).first != expected_e2)
            return "E_Hilb2 of (uv-1)^2 anchor mismatch";
        return {};
    });

    return results;
}

} // namespace mhpoly

#endif
