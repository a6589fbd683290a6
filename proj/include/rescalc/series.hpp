#pragma once

#include "rescalc/field.hpp"

#include <map>
#include <vector>

namespace rescalc {

/// Univariate Laurent polynomial over Field: t^shift * (c_0 + c_1 t + ...).
struct UniPoly {
    long shift = 0;
    std::vector<Field> c;

    UniPoly() : c(1, Field::zero()) {}
    static UniPoly constant(const Field& v);
    static UniPoly monomial(const Field& v, long deg);
    bool is_zero() const;
    void trim();
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    Field eval(const Field& t) const;
};

/// Laurent expansion of a function around a nonzero center s0:
/// sum over j >= valuation of coeff[j - valuation] * (t - s0)^j,
/// trusted through exponent `truncation` inclusive.
struct LaurentSeries {
    Field center;
    long valuation = 0;
    std::vector<Field> coeffs;
    long truncation = -1;

    bool is_zero() const { return coeffs.empty(); }
    Field coeff(long exponent) const;
};

/// Exact Laurent expansion of num/den around t = s0 (s0 != 0), with
/// coefficients computed through the given order. Throws on the zero function.
LaurentSeries series_expand(const UniPoly& num, const UniPoly& den, const Field& s0,
                            long order);

/// Coefficient of (t - s0)^{-1}; requires truncation >= -1.
Field residue_coefficient(const LaurentSeries& s);

/// Truncated power series arithmetic over an arbitrary commutative ring;
/// used with Field and with factored-function coefficients.
template <typename R>
struct TSeries {
    // coefficient of tau^{off + i} is c[i]; coefficients beyond `order`
    // (absolute exponent) are unknown
    long off = 0;
    long order = 0;
    std::vector<R> c;

    static TSeries zero(long order, const R& zero_elt) {
        TSeries s;
        s.off = order + 1;
        s.order = order;
        s.c.clear();
        (void)zero_elt;
        return s;
    }

    R coeff(long exponent, const R& zero_elt) const {
        if (exponent < off || exponent >= off + static_cast<long>(c.size())) return zero_elt;
        return c[exponent - off];
    }
};

template <typename R, typename Add, typename Mul>
TSeries<R> tseries_mul(const TSeries<R>& a, const TSeries<R>& b, const R& zero_elt,
                       Add add, Mul mul, bool (*is_zero)(const R&)) {
    TSeries<R> r;
    r.order = std::min(a.order, b.order);
    r.off = a.off + b.off;
    if (r.off > r.order) return TSeries<R>::zero(r.order, zero_elt);
    r.c.assign(static_cast<size_t>(r.order - r.off + 1), zero_elt);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            long e = a.off + static_cast<long>(i) + b.off + static_cast<long>(j);
            if (e > r.order) break;
            r.c[e - r.off] = add(r.c[e - r.off], mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

/// Exact rational binomial coefficient "a choose k" for integer a (any sign).
Rational generalized_binomial(long a, long k);

} // namespace rescalc
