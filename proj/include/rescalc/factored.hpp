#pragma once

#include "rescalc/torus.hpp"

#include <vector>

namespace rescalc {

/// One factor (1 - c * x^m)^mult with c = zeta(cphase) q^cexpo.
struct FFactor {
    IVec m;
    Rational cphase;
    Rational cexpo;
    long mult = 1;

    std::pair<Rational, Rational> constant() const { return {cphase, cexpo}; }
    /// The hypersurface { x^m = 1/c } cut out by this factor, sign-canonical.
    Hypersurface zero_set() const;
};

/// scalar * x^mono * prod of factors.
struct FTerm {
    Field scalar = Field::one();
    IVec mono;
    std::vector<FFactor> factors;

    FTerm() = default;
    explicit FTerm(long nvars) : mono(nvars, BigInt(0)) {}
    /// Merge equal factor records, canonicalize monomial signs, drop zeros.
    void normalize();
    long nvars() const { return static_cast<long>(mono.size()); }
};

/// Sum of factored terms on an nvars-dimensional coordinate torus. The
/// mu function and everything the residue engine produces live here.
struct Factored {
    long nvars = 0;
    std::vector<FTerm> terms;

    Factored() = default;
    explicit Factored(long n) : nvars(n) {}
    static Factored constant(long nvars, const Field& value);
    static Factored monomial(long nvars, const IVec& m, const Field& scale);

    bool is_zero() const { return terms.empty(); }
    bool single_term() const { return terms.size() == 1; }
    void normalize();

    friend Factored operator*(const Factored& a, const Factored& b);
    friend Factored operator+(const Factored& a, const Factored& b);
    Factored reciprocal_single() const; // single-term input

    /// Exact value at a point; throws pole_error if a negative-multiplicity
    /// factor vanishes there.
    Field evaluate(const TorusPoint& p) const;
    std::complex<double> evaluate_numeric(const TorusPoint& p, double q) const;

    /// Pullback along a Weyl matrix: result(x) = this(w x).
    Factored pullback(const IMat& w) const;

    /// Restriction to a parametrized coset: result(y) = this(base * y^dir).
    Factored restrict(const TorusPoint& base, const IMat& dir) const;
    Factored restrict(const Coset& a) const { return restrict(a.base, a.dir); }

    /// Order along a hypersurface component of the coordinate torus:
    /// positive for a pole, negative for a zero. Requires a single term.
    long order_along(const Hypersurface& s) const;
    /// Largest order over the terms (equals the order for single terms).
    long order_along_max(const Hypersurface& s) const;
    long order_along_coset(const Coset& s) const;
    long order_along_coset_max(const Coset& s) const;
};

class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& w) : std::runtime_error(w) {}
};

/// Sum of orders over the arrangement components through the point.
long order_at_point(const Factored& f, const TorusPoint& p, const Arrangement& arr);

} // namespace rescalc
