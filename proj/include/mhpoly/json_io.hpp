#ifndef MHPOLY_JSON_IO_HPP
#define MHPOLY_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "mhpoly/weyl.hpp"
#include "mhpoly/yseries.hpp"

namespace mhpoly {

using nlohmann::json;

/* Canonical JSON form shared by all modules:
 *   {"vars":["t","u","v"],"terms":[{"e":[k,p,q],"c":"<decimal integer>"}]}
 * Terms are sorted lexicographically by "e" (the MultiPoly term order).
 * Coefficients serialize as decimal strings; rationals are never emitted.
 */
inline json to_json(const MultiPoly& p) {
    p.assert_integral("to_json");
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"e", {e.t, e.u, e.v}},
                         {"c", boost::multiprecision::numerator(c).str()}});
    }
    return {{"vars", {"t", "u", "v"}}, {"terms", terms}};
}

inline json to_json(const YSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        json c = to_json(s[k]);
        coeffs.push_back({{"y", k}, {"terms", c["terms"]}});
    }
    return {{"vars", {"t", "u", "v"}}, {"order", s.order()}, {"coefficients", coeffs}};
}

inline MultiPoly poly_from_json(const json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw error("poly_from_json: missing \"terms\" array");
    MultiPoly p;
    for (const auto& t : j["terms"]) {
        const auto& e = t.at("e");
        if (!e.is_array() || e.size() != 3)
            throw error("poly_from_json: \"e\" must be a triple");
        Exponent ex{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        if (ex.t < 0 || ex.u < 0 || ex.v < 0)
            throw error("poly_from_json: negative exponent");
        p.add_term(ex, Rational(Integer(t.at("c").get<std::string>())));
    }
    return p;
}

inline YSeries series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    YSeries s(order);
    for (const auto& c : j.at("coefficients")) {
        int k = c.at("y").get<int>();
        if (k < 0 || k > order)
            throw error("series_from_json: y-degree out of range");
        s[k] = poly_from_json({{"terms", c.at("terms")}});
    }
    return s;
}

// Univariate charpoly in x: {"vars":["x"],"terms":[{"e":[k],"c":"..."}]}.
inline json to_json(const XPoly& p) {
    json terms = json::array();
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0)
            terms.push_back({{"e", {k}}, {"c", p[k].str()}});
    return {{"vars", {"x"}}, {"terms", terms}};
}

inline json to_json(const WeylTable& table) {
    json classes = json::array();
    for (const ClassDatum& cd : table.classes)
        classes.push_back({{"size", cd.size.str()}, {"charpoly", to_json(cd.charpoly)}});
    return {{"family", family_name(table.spec.family)},
            {"n", table.spec.n},
            {"order", table.spec.weyl_order().str()},
            {"classes", classes}};
}

} // namespace mhpoly

#endif
