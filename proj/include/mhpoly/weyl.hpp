#ifndef MHPOLY_WEYL_HPP
#define MHPOLY_WEYL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mhpoly/multipoly.hpp"
#include "mhpoly/partition.hpp"

namespace mhpoly {

enum class Family { GL, SL, SOodd, Sp, SOeven };

inline std::string family_name(Family f) {
    switch (f) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::SOodd: return "so-odd";
    case Family::Sp: return "sp";
    case Family::SOeven: return "so-even";
    }
    return "?";
}

/* Group family plus its integer parameter n: GL(n), SL(n), SO(2n+1),
 * Sp(2n), SO(2n). The Weyl group acts on the rank-r torus Lie algebra.
 */
struct GroupSpec {
    Family family = Family::GL;
    int n = 1;

    void validate() const {
        if (n < 1)
            throw spec_error("group parameter n must be >= 1");
        if (family == Family::SOeven && n < 2)
            throw spec_error("SO(2n) requires n >= 2");
        if (n > 30)
            throw spec_error("group parameter n must be <= 30");
    }

    int rank() const {
        switch (family) {
        case Family::GL: return n;
        case Family::SL: return n - 1;
        case Family::SOodd:
        case Family::Sp:
        case Family::SOeven: return n;
        }
        return 0;
    }

    Integer weyl_order() const {
        switch (family) {
        case Family::GL:
        case Family::SL: return factorial(n);
        case Family::SOodd:
        case Family::Sp: return (Integer(1) << n) * factorial(n);
        case Family::SOeven: return (Integer(1) << (n - 1)) * factorial(n);
        }
        return 0;
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Univariate polynomial in x, dense coefficient vector, index = power.
using XPoly = std::vector<Integer>;

inline XPoly xpoly_mul(const XPoly& a, const XPoly& b) {
    XPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division by (1 + x); throws if the remainder is nonzero.
inline XPoly xpoly_div_1px(const XPoly& a) {
    if (a.empty())
        return {};
    XPoly q(a.size() - 1);
    // synthetic division at root x = -1
    Integer carry = 0;
    for (std::size_t i = a.size(); i-- > 1;) {
        carry = a[i] - carry;
        q[i - 1] = carry;
    }
    if (a[0] - carry != 0)
        throw inexact_division_error("charpoly not divisible by (1+x)");
    return q;
}

// Eigen-factor of a single cycle: positive cycle 1 - (-x)^len, negative
// cycle 1 + (-x)^len.
inline XPoly cycle_factor(int len, bool negative) {
    XPoly f(static_cast<std::size_t>(len) + 1);
    f[0] = 1;
    Integer top = (len % 2 == 0) ? Integer(1) : Integer(-1); // (-x)^len coefficient
    f[static_cast<std::size_t>(len)] = negative ? top : -top;
    return f;
}

/* One Weyl conjugacy class: its size and the characteristic polynomial
 * det(I + x w) on the reflection representation.
 */
struct ClassDatum {
    Integer size;
    XPoly charpoly;
};

struct WeylTable {
    GroupSpec spec;
    std::vector<ClassDatum> classes;
};

namespace detail {

inline XPoly charpoly_from_cycles(const std::vector<int>& pos, const std::vector<int>& neg) {
    XPoly f{Integer(1)};
    for (int len : pos)
        f = xpoly_mul(f, cycle_factor(len, false));
    for (int len : neg)
        f = xpoly_mul(f, cycle_factor(len, true));
    return f;
}

// Centralizer order of a cycle type in S_n: prod j^{m_j} m_j!
inline Integer sym_centralizer(const Partition& lambda) {
    Integer z = 1;
    for (int j = 1; j <= lambda.n; ++j) {
        int m = lambda.mult[static_cast<std::size_t>(j - 1)];
        for (int k = 0; k < m; ++k)
            z *= j;
        z *= factorial(m);
    }
    return z;
}

// Centralizer order in the hyperoctahedral group B_n of the signed cycle
// type (lambda, mu): prod (2j)^{a_j} a_j! over both partitions.
inline Integer hyperoct_centralizer(const Partition& lambda, const Partition& mu) {
    Integer z = 1;
    auto half = [&](const Partition& p) {
        for (int j = 1; j <= p.n; ++j) {
            int m = p.mult[static_cast<std::size_t>(j - 1)];
            for (int k = 0; k < m; ++k)
                z *= 2 * j;
            z *= factorial(m);
        }
    };
    half(lambda);
    half(mu);
    return z;
}

} // namespace detail

/* Conjugacy-class table. Classes are indexed by cycle-type data only:
 * GL/SL by partitions of n, Sp and SO(2n+1) by partition pairs
 * (lambda, mu) with |lambda| + |mu| = n (mu lists the negative cycles),
 * SO(2n) by the pairs with an even number of parts in mu. For SO(2n) the
 * B_n class sizes are kept: split D_n classes share the same charpoly, so
 * class-function averages are unaffected.
 */
inline WeylTable class_table(const GroupSpec& spec) {
    spec.validate();
    WeylTable table{spec, {}};
    const int n = spec.n;

    if (spec.family == Family::GL || spec.family == Family::SL) {
        Integer nf = factorial(n);
        for (const Partition& lambda : partitions_of(n)) {
            ClassDatum cd;
            cd.size = nf / detail::sym_centralizer(lambda);
            cd.charpoly = detail::charpoly_from_cycles(lambda.parts(), {});
            if (spec.family == Family::SL)
                cd.charpoly = xpoly_div_1px(cd.charpoly);
            table.classes.push_back(std::move(cd));
        }
        return table;
    }

    // Hyperoctahedral families.
    Integer order_bn = (Integer(1) << n) * factorial(n);
    for (int k = 0; k <= n; ++k) {
        for (const Partition& lambda : partitions_of(k)) {
            for (const Partition& mu : partitions_of(n - k)) {
                if (spec.family == Family::SOeven && mu.num_parts() % 2 != 0)
                    continue;
                ClassDatum cd;
                cd.size = order_bn / detail::hyperoct_centralizer(lambda, mu);
                cd.charpoly = detail::charpoly_from_cycles(lambda.parts(), mu.parts());
                table.classes.push_back(std::move(cd));
            }
        }
    }
    return table;
}

// Signed-permutation matrix with entries -1, 0, 1.
using SignedPermMatrix = std::vector<std::vector<int>>;

/* Every Weyl group element as an explicit matrix on the rank-r
 * representation; oracle for class_table. For SL the n x n permutation
 * matrices are returned and the (1+x) division is applied downstream.
 */
inline std::vector<SignedPermMatrix> enumerate_elements(const GroupSpec& spec) {
    spec.validate();
    const int n = spec.n;
    switch (spec.family) {
    case Family::GL:
    case Family::SL:
        if (n > 10)
            throw spec_error("enumerate_elements: |W| bound exceeded (GL/SL needs n <= 10)");
        break;
    case Family::SOodd:
    case Family::Sp:
    case Family::SOeven:
        if (n > 8)
            throw spec_error("enumerate_elements: |W| bound exceeded (signed groups need n <= 8)");
        break;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;

    const bool with_signs = spec.family == Family::SOodd || spec.family == Family::Sp ||
                            spec.family == Family::SOeven;
    const bool even_signs_only = spec.family == Family::SOeven;

    std::vector<SignedPermMatrix> out;
    do {
        int sign_patterns = with_signs ? (1 << n) : 1;
        for (int s = 0; s < sign_patterns; ++s) {
            if (even_signs_only && (__builtin_popcount(static_cast<unsigned>(s)) % 2) != 0)
                continue;
            SignedPermMatrix m(static_cast<std::size_t>(n),
                               std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < n; ++i) {
                int sgn = (s >> i) & 1 ? -1 : 1;
                m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                 [static_cast<std::size_t>(i)] = sgn;
            }
            out.push_back(std::move(m));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/* det(I + x w) for a signed-permutation matrix w, by Laplace expansion
 * along rows (entries have degree <= 1, at most one off-diagonal entry per
 * row, so the expansion is cheap).
 */
inline XPoly charpoly_of_matrix(const SignedPermMatrix& w) {
    const int r = static_cast<int>(w.size());
    // entry (i,j) of I + x w as (constant, x-coefficient)
    auto entry = [&](int i, int j) -> std::pair<int, int> {
        return {i == j ? 1 : 0, w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
    };
    XPoly result(static_cast<std::size_t>(r) + 1);
    XPoly scratch{Integer(1)};
    unsigned full = (r >= 32) ? ~0u : ((1u << r) - 1u);
    auto rec = [&](auto&& self, int row, unsigned used, const XPoly& acc, int sgn) -> void {
        if (row == r) {
            for (std::size_t i = 0; i < acc.size(); ++i)
                result[i] += sgn > 0 ? acc[i] : -acc[i];
            return;
        }
        int col_index = 0;
        for (int j = 0; j < r; ++j) {
            if (used & (1u << j))
                continue;
            auto [c0, c1] = entry(row, j);
            if (c0 != 0 || c1 != 0) {
                XPoly next(acc.size() + 1);
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    next[i] += c0 * acc[i];
                    next[i + 1] += c1 * acc[i];
                }
                while (next.size() > 1 && next.back() == 0)
                    next.pop_back();
                self(self, row + 1, used | (1u << j), next, (col_index % 2 == 0) ? sgn : -sgn);
            }
            ++col_index;
        }
    };
    (void)full;
    rec(rec, 0, 0u, scratch, 1);
    result.resize(static_cast<std::size_t>(r) + 1);
    return result;
}

// Substitute x := m into a charpoly, yielding a MultiPoly.
inline MultiPoly xpoly_substitute(const XPoly& p, const Exponent& m) {
    MultiPoly r;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0)
            r.add_term(m * static_cast<int>(k), Rational(p[k]));
    return r;
}

// One substitution factor of a Molien average: charpoly(x := monomial)^exponent.
struct MolienFactor {
    Exponent monomial;
    int exponent = 1;
};

/* (1/|W|) sum over classes of size * prod_i charpoly(x := m_i)^{e_i}.
 * The result of every use in this library is a genuine MHP, so integer
 * coefficients are asserted; a failure means the table is corrupt.
 */
inline MultiPoly molien_average(const WeylTable& table, const std::vector<MolienFactor>& factors) {
    Integer order = table.spec.weyl_order();
    MultiPoly sum;
    for (const ClassDatum& cd : table.classes) {
        MultiPoly prod = MultiPoly::constant(Rational(cd.size));
        for (const MolienFactor& f : factors) {
            if (f.exponent < 0)
                throw spec_error("molien_average: negative factor exponent");
            prod *= xpoly_substitute(cd.charpoly, f.monomial).pow(f.exponent);
        }
        sum += prod;
    }
    sum *= Rational(Integer(1), order);
    sum.assert_integral("molien_average");
    return sum;
}

} // namespace mhpoly

#endif
