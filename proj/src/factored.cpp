#include "rescalc/factored.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rescalc {

Hypersurface Hypersurface_from_factor(const IVec& m, const Rational& cph, const Rational& cex) {
    // zero set of (1 - c x^m) is { x^m = 1/c }; only valid as a single
    // component when m is primitive (always true for coroot factors)
    Hypersurface h;
    if (content(m) != 1)
        throw std::logic_error("factor monomial is not primitive");
    h.form = m;
    h.cphase = (-cph).mod1();
    h.cexpo = -cex;
    if (lex_sign(h.form) < 0) {
        for (auto& x : h.form) x = -x;
        h.cphase = (-h.cphase).mod1();
        h.cexpo = -h.cexpo;
    }
    return h;
}

Hypersurface FFactor::zero_set() const { return Hypersurface_from_factor(m, cphase, cexpo); }

void FTerm::normalize() {
    // canonical monomial sign: (1 - c x^m) = (-c x^m) (1 - c^{-1} x^{-m})
    for (auto& f : factors) {
        if (lex_sign(f.m) >= 0) continue;
        Field c = Field::zeta_q(f.cphase, f.cexpo);
        scalar *= (-c).pow(f.mult);
        for (size_t i = 0; i < f.m.size(); ++i) {
            mono[i] += f.mult * f.m[i];
            f.m[i] = -f.m[i];
        }
        f.cphase = (-f.cphase).mod1();
        f.cexpo = -f.cexpo;
    }
    std::sort(factors.begin(), factors.end(), [](const FFactor& a, const FFactor& b) {
        return std::tie(a.m, a.cexpo, a.cphase) < std::tie(b.m, b.cexpo, b.cphase);
    });
    std::vector<FFactor> merged;
    for (auto& f : factors) {
        f.cphase = f.cphase.mod1();
        if (!merged.empty() && merged.back().m == f.m &&
            merged.back().cphase == f.cphase && merged.back().cexpo == f.cexpo) {
            merged.back().mult += f.mult;
        } else {
            merged.push_back(f);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const FFactor& f) { return f.mult == 0; }),
                 merged.end());
    // constant factors (m = 0) fold into the scalar
    std::vector<FFactor> kept;
    for (auto& f : merged) {
        bool zero_m = std::all_of(f.m.begin(), f.m.end(), [](const BigInt& x) { return x == 0; });
        if (zero_m) {
            Field v = Field::one() - Field::zeta_q(f.cphase, f.cexpo);
            if (v.is_zero() && f.mult < 0)
                throw pole_error("restriction lies inside a polar component");
            if (v.is_zero()) {
                scalar = Field::zero();
            } else {
                scalar *= v.pow(f.mult);
            }
        } else {
            kept.push_back(std::move(f));
        }
    }
    factors = std::move(kept);
}

Factored Factored::constant(long nvars, const Field& value) {
    Factored f(nvars);
    if (value.is_zero()) return f;
    FTerm t(nvars);
    t.scalar = value;
    f.terms.push_back(std::move(t));
    return f;
}

Factored Factored::monomial(long nvars, const IVec& m, const Field& scale) {
    Factored f(nvars);
    if (scale.is_zero()) return f;
    FTerm t(nvars);
    t.scalar = scale;
    t.mono = m;
    f.terms.push_back(std::move(t));
    return f;
}

void Factored::normalize() {
    for (auto& t : terms) t.normalize();
    terms.erase(std::remove_if(terms.begin(), terms.end(),
                               [](const FTerm& t) { return t.scalar.is_zero(); }),
                terms.end());
}

Factored operator*(const Factored& a, const Factored& b) {
    if (a.nvars != b.nvars) throw std::logic_error("Factored: variable count mismatch");
    Factored r(a.nvars);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            FTerm t(a.nvars);
            t.scalar = ta.scalar * tb.scalar;
            for (long i = 0; i < a.nvars; ++i) t.mono[i] = ta.mono[i] + tb.mono[i];
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            r.terms.push_back(std::move(t));
        }
    r.normalize();
    return r;
}

Factored operator+(const Factored& a, const Factored& b) {
    if (a.nvars != b.nvars) throw std::logic_error("Factored: variable count mismatch");
    Factored r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    r.normalize();
    return r;
}

Factored Factored::reciprocal_single() const {
    if (terms.size() != 1)
        throw std::domain_error("reciprocal requires a single product term");
    Factored r(nvars);
    FTerm t = terms[0];
    t.scalar = t.scalar.inverse();
    for (auto& x : t.mono) x = -x;
    for (auto& f : t.factors) f.mult = -f.mult;
    r.terms.push_back(std::move(t));
    return r;
}

Field Factored::evaluate(const TorusPoint& p) const {
    Field total = Field::zero();
    for (const auto& t : terms) {
        Field v = t.scalar * p.monomial_value(t.mono);
        for (const auto& f : t.factors) {
            auto [ph, ex] = p.monomial(f.m);
            Field fac = Field::one() - Field::zeta_q((ph + f.cphase).mod1(), ex + f.cexpo);
            if (fac.is_zero()) {
                if (f.mult < 0)
                    throw pole_error("evaluate: pole at the given point");
                v = Field::zero();
                break;
            }
            v *= fac.pow(f.mult);
        }
        total += v;
    }
    return total;
}

std::complex<double> Factored::evaluate_numeric(const TorusPoint& p, double q) const {
    // used on contours away from singularities; exactness is not required here
    std::complex<double> total(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    auto mono_val = [&](const IVec& m) {
        auto [ph, ex] = p.monomial(m);
        double mod = std::pow(q, ex.to_double());
        double arg = two_pi * ph.to_double();
        return std::complex<double>(mod * std::cos(arg), mod * std::sin(arg));
    };
    for (const auto& t : terms) {
        std::complex<double> v = t.scalar.to_complex(q) * mono_val(t.mono);
        for (const auto& f : t.factors) {
            IVec m = f.m;
            auto [ph, ex] = p.monomial(m);
            double mod = std::pow(q, (ex + f.cexpo).to_double());
            double arg = two_pi * (ph + f.cphase).to_double();
            std::complex<double> fac =
                1.0 - std::complex<double>(mod * std::cos(arg), mod * std::sin(arg));
            v *= std::pow(fac, static_cast<double>(f.mult));
        }
        total += v;
    }
    return total;
}

Factored Factored::pullback(const IMat& w) const {
    IMat wt = w.transposed();
    Factored r(nvars);
    for (const auto& t : terms) {
        FTerm nt(nvars);
        nt.scalar = t.scalar;
        nt.mono = mat_vec(wt, t.mono);
        for (const auto& f : t.factors) {
            FFactor nf = f;
            nf.m = mat_vec(wt, f.m);
            nt.factors.push_back(std::move(nf));
        }
        r.terms.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

Factored Factored::restrict(const TorusPoint& base, const IMat& dir) const {
    Factored r(dir.cols);
    for (const auto& t : terms) {
        FTerm nt(dir.cols);
        auto [bph, bex] = base.monomial(t.mono);
        nt.scalar = t.scalar * Field::zeta_q(bph, bex);
        nt.mono = vec_mat(t.mono, dir);
        for (const auto& f : t.factors) {
            auto [fph, fex] = base.monomial(f.m);
            FFactor nf;
            nf.m = vec_mat(f.m, dir);
            nf.cphase = (f.cphase + fph).mod1();
            nf.cexpo = f.cexpo + fex;
            nf.mult = f.mult;
            nt.factors.push_back(std::move(nf));
        }
        r.terms.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

long Factored::order_along(const Hypersurface& s) const {
    if (terms.size() != 1)
        throw std::domain_error("order_along requires a single product term");
    return order_along_max(s);
}

long Factored::order_along_max(const Hypersurface& s) const {
    long best = 0;
    bool first = true;
    for (const auto& t : terms) {
        long ord = 0;
        for (const auto& f : t.factors) {
            // (1 - c x^m) vanishes identically on { x^g = v } iff m = k g
            // and c v^k = 1
            IVec fp = primitive(f.m);
            bool flip = lex_sign(fp) < 0;
            if (flip)
                for (auto& x : fp) x = -x;
            if (fp != s.form) continue;
            BigInt k = content(f.m);
            if (flip) k = -k;
            Rational kq(k);
            if ((f.cphase + kq * s.cphase).mod1().is_zero() &&
                (f.cexpo + kq * s.cexpo).is_zero())
                ord -= f.mult;
        }
        if (first || ord > best) { best = ord; first = false; }
    }
    return first ? 0 : best;
}

long Factored::order_along_coset(const Coset& s) const {
    if (terms.size() != 1)
        throw std::domain_error("order_along requires a single product term");
    return order_along_coset_max(s);
}

long Factored::order_along_coset_max(const Coset& s) const {
    long best = 0;
    bool first = true;
    for (const auto& t : terms) {
        long ord = 0;
        for (const auto& f : t.factors) {
            // vanishes identically on s iff m is constant on s with value 1/c
            IVec fd = vec_mat(f.m, s.dir);
            if (!std::all_of(fd.begin(), fd.end(), [](const BigInt& x) { return x == 0; }))
                continue;
            auto [ph, ex] = s.base.monomial(f.m);
            if ((ph + f.cphase).mod1().is_zero() && (ex + f.cexpo).is_zero()) ord -= f.mult;
        }
        if (first || ord > best) { best = ord; first = false; }
    }
    return first ? 0 : best;
}

long order_at_point(const Factored& f, const TorusPoint& p, const Arrangement& arr) {
    long total = 0;
    for (const auto& h : arr.components)
        if (h.contains(p)) total += f.order_along_max(h);
    return total;
}

} // namespace rescalc
