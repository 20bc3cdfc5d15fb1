#ifndef MHPOLY_MODULI_HPP
#define MHPOLY_MODULI_HPP

#include <optional>

#include "mhpoly/weyl.hpp"

namespace mhpoly {

enum class Space { Higgs, Character, Bundles };

inline std::string space_name(Space s) {
    switch (s) {
    case Space::Higgs: return "higgs";
    case Space::Character: return "char";
    case Space::Bundles: return "bundle";
    }
    return "?";
}

/* A moduli space of the supported kinds: group data, dimension d of the
 * abelian variety, and the space flavour. torus_exponent_override replaces
 * the exponent 2d for character varieties of Z^r (odd r allowed).
 */
struct ModuliSpec {
    GroupSpec group;
    int d = 1;
    Space space = Space::Character;
    std::optional<int> torus_exponent_override;

    void validate() const {
        group.validate();
        if (d < 1)
            throw spec_error("abelian dimension d must be >= 1");
        if (torus_exponent_override) {
            if (space != Space::Character)
                throw spec_error("torus exponent override is only valid for character varieties");
            if (*torus_exponent_override < 1)
                throw spec_error("torus exponent must be >= 1");
        }
    }

    int torus_exponent() const { return torus_exponent_override.value_or(2 * d); }
};

// MHP of the character variety: Weyl average of det(I + tuv w)^{2d}.
inline MultiPoly mhp_character(const ModuliSpec& spec) {
    spec.validate();
    if (spec.space != Space::Character)
        throw spec_error("mhp_character requires space = character");
    WeylTable table = class_table(spec.group);
    return molien_average(table, {{Exponent{1, 1, 1}, spec.torus_exponent()}});
}

/* MHP of the Higgs moduli space: Weyl average of
 * (det(I + tu w) det(I + tv w))^d. The bundle moduli space M_A(G) carries
 * the same mixed Hodge structure, so Space::Bundles returns this verbatim.
 */
inline MultiPoly mhp_higgs(const ModuliSpec& spec) {
    spec.validate();
    if (spec.space == Space::Character)
        throw spec_error("mhp_higgs requires space = higgs or bundles");
    WeylTable table = class_table(spec.group);
    return molien_average(table, {{Exponent{1, 1, 0}, spec.d}, {Exponent{1, 0, 1}, spec.d}});
}

inline MultiPoly mhp(const ModuliSpec& spec) {
    return spec.space == Space::Character ? mhp_character(spec) : mhp_higgs(spec);
}

// Poincare polynomial: the MHP at u = v = 1.
inline MultiPoly poincare_moduli(const ModuliSpec& spec) {
    return mhp(spec).at_u1v1();
}

// Euler characteristic: the MHP at t = -1, u = v = 1.
inline Integer euler_moduli(const ModuliSpec& spec) {
    Rational chi = mhp(spec).at_tm1_u1v1();
    if (boost::multiprecision::denominator(chi) != 1)
        throw integrality_error("euler_moduli: non-integer Euler characteristic");
    return boost::multiprecision::numerator(chi);
}

/* Base-space inputs for the Hilbert-scheme pipelines: the E-polynomials and
 * MHPs of T*A (Higgs side) and of the torus G_m^{2d} (character side), plus
 * the common complex dimension m = 2d.
 */
struct BaseInputs {
    MultiPoly e_higgs;
    MultiPoly e_char;
    MultiPoly mu_higgs;
    MultiPoly mu_char;
    int m = 2;
};

inline BaseInputs base_inputs(int d) {
    if (d < 1)
        throw spec_error("abelian dimension d must be >= 1");
    BaseInputs b;
    MultiPoly u = MultiPoly::var_u(), v = MultiPoly::var_v(), t = MultiPoly::var_t();
    MultiPoly one = MultiPoly::one();
    b.e_higgs = (u * v).pow(d) * (u - one).pow(d) * (v - one).pow(d);
    b.e_char = (u * v - one).pow(2 * d);
    b.mu_higgs = ((one + t * u) * (one + t * v)).pow(d);
    b.mu_char = (one + t * u * v).pow(2 * d);
    b.m = 2 * d;
    return b;
}

} // namespace mhpoly

#endif
