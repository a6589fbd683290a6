#pragma once

#include "rescalc/factored.hpp"

#include <optional>

namespace rescalc {

/// Parameters of a mu function, constant on W-orbits of roots. Systems with
/// a single root length use only the "short" slot.
struct MuParameters {
    struct OrbitParams {
        Rational k = Rational(1);
        std::optional<Rational> l; // phase-1/2 block parameter, absent = no block
        Rational scale = Rational(1); // m_gamma, integer in the unramified model
        Rational c = Rational(1);     // leading constant c_alpha
    };
    OrbitParams short_roots;
    OrbitParams long_roots;

    const OrbitParams& for_root(const Root& r) const {
        return r.is_long ? long_roots : short_roots;
    }
    static MuParameters equal(const Rational& k) {
        MuParameters p;
        p.short_roots.k = k;
        p.long_roots.k = k;
        return p;
    }
    static MuParameters mixed(const Rational& k_short, const Rational& k_long) {
        MuParameters p;
        p.short_roots.k = k_short;
        p.long_roots.k = k_long;
        return p;
    }
};

/// The Harish-Chandra mu function in factored form: for each positive root,
/// numerator (1 - x^{m gamma^vee})(1 - x^{-m gamma^vee}) over denominator
/// (1 - q^k x^{-m gamma^vee})(1 - q^k x^{m gamma^vee}), plus a phase-1/2
/// block with parameter l when supplied.
Factored build_mu(const RootSystem& rs, const MuParameters& params);

/// Sub-Levi factor: the product of the mu factors whose root lies in the
/// Levi subsystem attached to the coset (monomial constant along the coset
/// direction).
Factored mu_levi_factor(const Factored& mu, const Coset& a);

/// All singular components of mu and 1/mu, closed under imaginary parts.
Arrangement arrangement_from_mu(const Factored& mu, const RootSystem& rs);

/// Restriction of f to the line base * t^direction; the result lives on a
/// one-dimensional torus. Every factor monomial must pair integrally with
/// the direction (automatic for integer directions).
Factored restrict_to_line(const Factored& f, const TorusPoint& base, const IVec& direction);

} // namespace rescalc
