#ifndef MHPOLY_PARTITION_HPP
#define MHPOLY_PARTITION_HPP

#include <algorithm>
#include <vector>

#include "mhpoly/multipoly.hpp"

namespace mhpoly {

/* Integer partition of n in multiplicity form: mult[j-1] is the number of
 * parts of size j, for j = 1..n.
 */
struct Partition {
    int n = 0;
    std::vector<int> mult; // length n (empty when n == 0)

    // Number of parts |lambda|.
    int num_parts() const {
        int s = 0;
        for (int m : mult)
            s += m;
        return s;
    }
    // Number of distinct part sizes.
    int num_distinct() const {
        int s = 0;
        for (int m : mult)
            if (m > 0)
                ++s;
        return s;
    }
    // Parts as a weakly decreasing list.
    std::vector<int> parts() const {
        std::vector<int> p;
        for (int j = n; j >= 1; --j)
            for (int k = 0; k < mult[static_cast<std::size_t>(j - 1)]; ++k)
                p.push_back(j);
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of n (n >= 0; n = 0 yields the single empty partition).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    cur.n = n;
    cur.mult.assign(static_cast<std::size_t>(n), 0);
    // Parts chosen in weakly decreasing order, largest first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            ++cur.mult[static_cast<std::size_t>(p - 1)];
            self(self, remaining - p, p);
            --cur.mult[static_cast<std::size_t>(p - 1)];
        }
    };
    rec(rec, n, n);
    return out;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace mhpoly

#endif
