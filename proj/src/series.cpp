#include "rescalc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rescalc {

UniPoly UniPoly::constant(const Field& v) {
    UniPoly p;
    p.c[0] = v;
    return p;
}

UniPoly UniPoly::monomial(const Field& v, long deg) {
    UniPoly p;
    p.shift = deg;
    p.c[0] = v;
    return p;
}

bool UniPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Field& f) { return f.is_zero(); });
}

void UniPoly::trim() {
    size_t lead = 0;
    while (lead + 1 < c.size() && c[lead].is_zero()) ++lead;
    if (lead > 0) {
        c.erase(c.begin(), c.begin() + lead);
        shift += static_cast<long>(lead);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.shift = a.shift + b.shift;
    r.c.assign(a.c.size() + b.c.size() - 1, Field::zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    long lo = std::min(a.shift, b.shift);
    long hi = std::max(a.shift + static_cast<long>(a.c.size()),
                       b.shift + static_cast<long>(b.c.size()));
    UniPoly r;
    r.shift = lo;
    r.c.assign(static_cast<size_t>(hi - lo), Field::zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[a.shift - lo + i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[b.shift - lo + i] += b.c[i];
    r.trim();
    return r;
}

Field UniPoly::eval(const Field& t) const {
    Field v = Field::zero();
    Field tp = t.pow(shift);
    for (const auto& coeff : c) {
        v += coeff * tp;
        tp *= t;
    }
    return v;
}

Field LaurentSeries::coeff(long exponent) const {
    if (exponent > truncation)
        throw std::domain_error("LaurentSeries: coefficient beyond truncation");
    if (exponent < valuation) return Field::zero();
    size_t i = static_cast<size_t>(exponent - valuation);
    return i < coeffs.size() ? coeffs[i] : Field::zero();
}

Rational generalized_binomial(long a, long k) {
    if (k < 0) return Rational(0);
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(a - i);
    Rational den(1);
    for (long i = 1; i <= k; ++i) den *= Rational(i);
    return num / den;
}

namespace {

// Taylor coefficients of p(s0 + s) for a plain polynomial p (no shift):
// repeated synthetic division by (t - s0).
std::vector<Field> taylor_shift(const std::vector<Field>& p, const Field& s0) {
    std::vector<Field> out;
    std::vector<Field> cur = p;
    for (;;) {
        if (cur.size() == 1) {
            out.push_back(cur[0]);
            break;
        }
        long m = static_cast<long>(cur.size()) - 1;
        std::vector<Field> q(m, Field::zero());
        q[m - 1] = cur[m];
        for (long i = m - 1; i >= 1; --i) q[i - 1] = cur[i] + s0 * q[i];
        out.push_back(cur[0] + s0 * q[0]);
        cur = std::move(q);
    }
    return out;
}

} // namespace

LaurentSeries series_expand(const UniPoly& num_in, const UniPoly& den_in, const Field& s0,
                            long order) {
    if (den_in.is_zero()) throw std::domain_error("series_expand: zero denominator");
    if (num_in.is_zero()) throw std::domain_error("series_expand: zero function has no valuation");
    if (s0.is_zero()) throw std::domain_error("series_expand: center must be nonzero");
    // clear the Laurent shifts: num/den = t^{a-b} * num.c / den.c, and
    // t^{k} = (s0 + s)^{k} contributes a unit series
    long pow_shift = num_in.shift - den_in.shift;
    std::vector<Field> ntay = taylor_shift(num_in.c, s0);
    std::vector<Field> dtay = taylor_shift(den_in.c, s0);
    auto valuation_of = [](const std::vector<Field>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return static_cast<long>(i);
        return static_cast<long>(v.size());
    };
    long vn = valuation_of(ntay);
    long vd = valuation_of(dtay);
    if (vn == static_cast<long>(ntay.size()))
        throw std::domain_error("series_expand: zero numerator");
    long val = vn - vd;
    long nterms = order - val + 1;
    LaurentSeries s;
    s.center = s0;
    s.valuation = val;
    s.truncation = order;
    if (nterms <= 0) {
        s.coeffs.clear();
        return s;
    }
    // unit parts
    std::vector<Field> nu(ntay.begin() + vn, ntay.end());
    std::vector<Field> du(dtay.begin() + vd, dtay.end());
    nu.resize(std::max<size_t>(nu.size(), nterms), Field::zero());
    du.resize(std::max<size_t>(du.size(), nterms), Field::zero());
    // invert du as a power series
    std::vector<Field> inv(nterms, Field::zero());
    Field lead = du[0].inverse();
    inv[0] = lead;
    for (long k = 1; k < nterms; ++k) {
        Field acc = Field::zero();
        for (long j = 1; j <= k; ++j)
            if (j < static_cast<long>(du.size())) acc += du[j] * inv[k - j];
        inv[k] = -(lead * acc);
    }
    // multiply nu * inv
    std::vector<Field> res(nterms, Field::zero());
    for (long i = 0; i < nterms; ++i) {
        if (nu[i].is_zero()) continue;
        for (long j = 0; i + j < nterms; ++j) res[i + j] += nu[i] * inv[j];
    }
    // multiply by (s0 + s)^{pow_shift} as a series: binomial expansion
    if (pow_shift != 0) {
        std::vector<Field> binom(nterms, Field::zero());
        Field s0pow = s0.pow(pow_shift);
        for (long k = 0; k < nterms; ++k)
            binom[k] = Field(generalized_binomial(pow_shift, k)) * s0pow * s0.pow(-k);
        std::vector<Field> res2(nterms, Field::zero());
        for (long i = 0; i < nterms; ++i) {
            if (res[i].is_zero()) continue;
            for (long j = 0; i + j < nterms; ++j) res2[i + j] += res[i] * binom[j];
        }
        res = std::move(res2);
    }
    s.coeffs = std::move(res);
    // tighten the valuation if leading coefficients vanished
    while (!s.coeffs.empty() && s.coeffs.front().is_zero()) {
        s.coeffs.erase(s.coeffs.begin());
        ++s.valuation;
    }
    return s;
}

Field residue_coefficient(const LaurentSeries& s) {
    if (s.truncation < -1)
        throw std::domain_error("residue_coefficient: series truncated above exponent -1");
    if (s.valuation > -1) return Field::zero();
    return s.coeff(-1);
}

} // namespace rescalc
