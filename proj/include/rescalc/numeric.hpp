#pragma once

#include "rescalc/walk.hpp"

#include <complex>
#include <string>
#include <vector>

namespace rescalc {

struct NumericConfig {
    double q = 2.0;
    long grid = 256;          // quadrature points per circle, a power of two
    double tolerance = 1e-6;  // relative
    unsigned long seed = 0;

    void validate() const;
};

/// Mean of f over the compact torus { Re = real_part } (mass-one measure),
/// by the product trapezoid rule. The contour must avoid the singular
/// components of f; checked exactly against the arrangement when given.
std::complex<double> quadrature_integral(const Factored& f, const QVec& real_part,
                                         const NumericConfig& cfg,
                                         const Arrangement* arr = nullptr);

/// Mean of the restriction of f to a coset contour at the given ambient
/// real part (which must lie on the coset's real span).
std::complex<double> quadrature_on_coset(const Factored& f, const Coset& a,
                                         const QVec& real_part, const NumericConfig& cfg);

struct CheckReport {
    bool pass = false;
    double lhs_minus_rhs = 0.0;
    double scale = 1.0;
    std::vector<std::pair<std::string, std::complex<double>>> contributions;
    std::string message;
};

/// Prop 3.6 jump test: I(r2) - I(r1) against the sum of the residue-term
/// integrals of the components separating the two adjacent chambers.
CheckReport check_crossing_identity(const Factored& f, const QVec& r1, const QVec& r2,
                                    const Arrangement& arr, const RootSystem& rs,
                                    const NumericConfig& cfg);

/// Thm 3.10 identity: the start contour integral of f equals the sum of the
/// decomposition terms (numeric line integrals for positive-dimensional
/// cosets, exact point values evaluated at q).
CheckReport check_full_decomposition(const Factored& f, const Decomposition& dec,
                                     const RootSystem& rs, const NumericConfig& cfg);

/// Numeric contour integral of one decomposition term applied to f: the
/// chain residues integrated over the term's evaluation contours.
std::complex<double> term_value_numeric(const CosetGroup& g, const Factored& f,
                                        const RootSystem& rs, const NumericConfig& cfg);

/// Exact value of a full-rank (point) term applied to f.
Field term_value_exact(const CosetGroup& g, const Factored& f, const RootSystem& rs);

} // namespace rescalc
