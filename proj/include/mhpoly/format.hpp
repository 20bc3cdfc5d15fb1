#ifndef MHPOLY_FORMAT_HPP
#define MHPOLY_FORMAT_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mhpoly/yseries.hpp"

namespace mhpoly {

enum class TextStyle { Plain, Latex };

namespace detail {

inline std::string pow_str(const std::string& base, int e, TextStyle style) {
    if (e == 0)
        return "";
    if (e == 1)
        return base;
    if (style == TextStyle::Latex)
        return base + "^{" + std::to_string(e) + "}";
    return base + "^" + std::to_string(e);
}

inline std::string uv_monomial(int p, int q, TextStyle style) {
    return pow_str("u", p, style) + pow_str("v", q, style);
}

} // namespace detail

/* Human-readable rendering. Balanced polynomials (every term a power of
 * tuv) are shown in the variable s = tuv; otherwise terms are grouped by
 * t-degree with (u,v) parts collected per coefficient, e.g.
 *   1 + t(u + v) + 2t^2uv + t^3(u^2v + uv^2) + t^4u^2v^2.
 * The LaTeX style differs from plain text only by braced exponents.
 */
inline std::string format_poly(const MultiPoly& p, TextStyle style = TextStyle::Plain) {
    if (p.is_zero())
        return "0";
    p.assert_integral("format_poly");

    bool balanced = true, in_t_only = true;
    for (const auto& [e, c] : p.terms()) {
        if (!(e.t == e.u && e.u == e.v))
            balanced = false;
        if (e.u != 0 || e.v != 0)
            in_t_only = false;
    }

    std::vector<std::string> pieces; // signed term strings, in display order
    auto emit = [&](const Integer& coeff, const std::string& body) {
        Integer a = coeff < 0 ? Integer(-coeff) : coeff;
        std::string s;
        if (a != 1 || body.empty())
            s += a.str();
        s += body;
        if (coeff < 0)
            s = "-" + s;
        pieces.push_back(s);
    };

    if (in_t_only) {
        for (const auto& [e, c] : p.terms())
            emit(boost::multiprecision::numerator(c), detail::pow_str("t", e.t, style));
    } else if (balanced) {
        for (const auto& [e, c] : p.terms())
            emit(boost::multiprecision::numerator(c), detail::pow_str("(tuv)", e.t, style));
    } else {
        // group by t-degree, then by coefficient value within the group
        std::map<int, std::vector<std::pair<Exponent, Integer>>> by_t;
        for (const auto& [e, c] : p.terms())
            by_t[e.t].push_back({e, boost::multiprecision::numerator(c)});
        for (auto& [td, terms] : by_t) {
            // display order: u-degree descending, then v ascending
            std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
                if (a.first.u != b.first.u)
                    return a.first.u > b.first.u;
                return a.first.v < b.first.v;
            });
            std::vector<bool> done(terms.size(), false);
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (done[i])
                    continue;
                std::vector<std::string> monos;
                monos.push_back(detail::uv_monomial(terms[i].first.u, terms[i].first.v, style));
                done[i] = true;
                for (std::size_t j = i + 1; j < terms.size(); ++j)
                    if (!done[j] && terms[j].second == terms[i].second) {
                        monos.push_back(
                            detail::uv_monomial(terms[j].first.u, terms[j].first.v, style));
                        done[j] = true;
                    }
                std::string body = detail::pow_str("t", td, style);
                if (monos.size() == 1) {
                    body += monos[0];
                } else {
                    std::string inner = monos[0];
                    for (std::size_t k = 1; k < monos.size(); ++k)
                        inner += " + " + monos[k];
                    body += "(" + inner + ")";
                }
                emit(terms[i].second, body);
            }
        }
    }

    std::string out = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (!pieces[i].empty() && pieces[i][0] == '-')
            out += " - " + pieces[i].substr(1);
        else
            out += " + " + pieces[i];
    }
    return out;
}

inline std::string format_series(const YSeries& s, TextStyle style = TextStyle::Plain) {
    std::ostringstream os;
    for (int k = 0; k <= s.order(); ++k) {
        os << "y" << (style == TextStyle::Latex ? "^{" : "^") << k
           << (style == TextStyle::Latex ? "}: " : ": ") << format_poly(s[k], style) << "\n";
    }
    return os.str();
}

} // namespace mhpoly

#endif
