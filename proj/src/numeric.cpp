#include "rescalc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rescalc {

void NumericConfig::validate() const {
    if (!(q > 1.0)) throw std::invalid_argument("NumericConfig: q must exceed 1");
    if (grid < 2 || (grid & (grid - 1)) != 0)
        throw std::invalid_argument("NumericConfig: grid must be a power of two");
}

namespace {

std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v, size_t lo, size_t hi) {
    if (hi == lo) return {0.0, 0.0};
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Mean of g over the product contour with the given exponent vector; the
// per-factor phase walks the N-th roots of unity, so one shared root table
// serves every factor.
std::complex<double> fast_mean(const Factored& g, const QVec& texp, const NumericConfig& cfg) {
    const long n = g.nvars;
    const long N = cfg.grid;
    const double two_pi = 6.283185307179586476925286766559;
    if (n == 0) {
        TorusPoint empty;
        return g.evaluate_numeric(empty, cfg.q);
    }
    std::vector<std::complex<double>> roots(N);
    for (long k = 0; k < N; ++k)
        roots[k] = std::complex<double>(std::cos(two_pi * k / N), std::sin(two_pi * k / N));
    struct FacData {
        std::complex<double> c; // constant including modulus and base phase
        std::vector<long> m;    // per-axis phase steps mod N
        long mult;
    };
    struct TermData {
        std::complex<double> c;
        std::vector<long> m;
        std::vector<FacData> factors;
    };
    std::vector<TermData> terms;
    auto steps_of = [&](const IVec& m) {
        std::vector<long> s(n);
        for (long i = 0; i < n; ++i) {
            BigInt r = m[i] % N;
            if (r < 0) r += N;
            s[i] = r.convert_to<long>();
        }
        return s;
    };
    for (const auto& t : g.terms) {
        TermData td;
        Rational texp_mono;
        for (long i = 0; i < n; ++i) texp_mono += Rational(t.mono[i]) * texp[i];
        td.c = t.scalar.to_complex(cfg.q) * std::pow(cfg.q, texp_mono.to_double());
        td.m = steps_of(t.mono);
        for (const auto& f : t.factors) {
            FacData fd;
            Rational e = f.cexpo;
            for (long i = 0; i < n; ++i) e += Rational(f.m[i]) * texp[i];
            double mod = std::pow(cfg.q, e.to_double());
            double arg = two_pi * f.cphase.to_double();
            fd.c = mod * std::complex<double>(std::cos(arg), std::sin(arg));
            fd.m = steps_of(f.m);
            fd.mult = f.mult;
            td.factors.push_back(std::move(fd));
        }
        terms.push_back(std::move(td));
    }
    std::vector<long> idx(n, 0);
    std::vector<std::complex<double>> vals;
    for (;;) {
        std::complex<double> point_val(0.0, 0.0);
        for (const auto& t : terms) {
            long ph = 0;
            for (long i = 0; i < n; ++i) ph = (ph + t.m[i] * idx[i]) % N;
            std::complex<double> v = t.c * roots[ph];
            for (const auto& f : t.factors) {
                long fp = 0;
                for (long i = 0; i < n; ++i) fp = (fp + f.m[i] * idx[i]) % N;
                std::complex<double> fac = 1.0 - f.c * roots[fp];
                if (f.mult > 0)
                    for (long k = 0; k < f.mult; ++k) v *= fac;
                else
                    for (long k = 0; k < -f.mult; ++k) v /= fac;
            }
            point_val += v;
        }
        vals.push_back(point_val);
        long pos = n - 1;
        while (pos >= 0 && ++idx[pos] >= N) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return pairwise_sum(vals, 0, vals.size()) / static_cast<double>(vals.size());
}

} // namespace

std::complex<double> quadrature_integral(const Factored& f, const QVec& real_part,
                                         const NumericConfig& cfg, const Arrangement* arr) {
    cfg.validate();
    long n = f.nvars;
    (void)arr;
    for (const auto& t : f.terms)
        for (const auto& fac : t.factors) {
            if (fac.mult >= 0) continue;
            Rational v = fac.cexpo;
            for (long i = 0; i < n; ++i) v += Rational(fac.m[i]) * real_part[i];
            if (v.is_zero())
                throw std::invalid_argument(
                    "quadrature_integral: contour touches a polar component");
        }
    return fast_mean(f, real_part, cfg);
}

std::complex<double> quadrature_on_coset(const Factored& f, const Coset& a,
                                         const QVec& real_part, const NumericConfig& cfg) {
    cfg.validate();
    QVec rhs(a.ambient_rank());
    for (long i = 0; i < a.ambient_rank(); ++i)
        rhs[i] = real_part[i] - a.base.expo[i];
    auto t = solve_linear(QMat::from_int(a.dir), rhs);
    if (!t) throw std::invalid_argument("quadrature_on_coset: real part off the coset");
    Factored g = f.restrict(a);
    return fast_mean(g, *t, cfg);
}

CheckReport check_crossing_identity(const Factored& f, const QVec& r1, const QVec& r2,
                                    const Arrangement& arr, const RootSystem& rs,
                                    const NumericConfig& cfg) {
    CheckReport rep;
    std::vector<int> separating;
    std::pair<IVec, Rational> wall{{}, Rational(0)};
    for (size_t ci = 0; ci < arr.components.size(); ++ci) {
        const auto& h = arr.components[ci];
        Rational v1 = -h.cexpo, v2 = -h.cexpo;
        for (size_t i = 0; i < h.form.size(); ++i) {
            v1 += Rational(h.form[i]) * r1[i];
            v2 += Rational(h.form[i]) * r2[i];
        }
        if (v1.is_zero() || v2.is_zero())
            throw std::invalid_argument("check_crossing_identity: contour on a wall");
        if (v1.sign() == v2.sign()) continue;
        IVec fp = primitive(h.form);
        Rational lev = h.cexpo / Rational(content(h.form));
        if (lex_sign(fp) < 0) {
            for (auto& x : fp) x = -x;
            lev = -lev;
        }
        if (separating.empty()) {
            wall = {fp, lev};
        } else if (!(wall.first == fp && wall.second == lev)) {
            throw std::invalid_argument("check_crossing_identity: chambers not adjacent");
        }
        separating.push_back(static_cast<int>(ci));
    }
    std::complex<double> i1 = quadrature_integral(f, r1, cfg, &arr);
    std::complex<double> i2 = quadrature_integral(f, r2, cfg, &arr);
    QVec mid(r1.size());
    {
        Rational f1 = -wall.second, f2 = -wall.second;
        for (size_t i = 0; i < wall.first.size(); ++i) {
            f1 += Rational(wall.first[i]) * r1[i];
            f2 += Rational(wall.first[i]) * r2[i];
        }
        Rational s = f1 / (f1 - f2);
        for (size_t i = 0; i < r1.size(); ++i) mid[i] = r1[i] + s * (r2[i] - r1[i]);
    }
    std::complex<double> rhs(0.0, 0.0);
    Coset top = Coset::full_torus(static_cast<long>(r1.size()));
    for (int ci : separating) {
        const auto& h = arr.components[ci];
        std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq{
            {h.form, {h.cphase, h.cexpo}}};
        for (auto& sub : component_split(static_cast<long>(r1.size()), eq)) {
            StepFrame sf = step_frame(top, sub, rs);
            Factored res = residue_step(f, sf);
            if (res.is_zero()) continue;
            Rational side2 = -sf.value.second;
            for (size_t i = 0; i < r2.size(); ++i)
                side2 += Rational(sf.local_form[i]) * r2[i];
            double sign = side2.sign() > 0 ? 1.0 : -1.0;
            // z-normalization carries 1/log q; the mass-one jump carries log q
            std::complex<double> val;
            if (sf.sub_frame.dim() == 0) {
                val = res.evaluate(TorusPoint({}, {})).to_complex(cfg.q) * std::log(cfg.q);
            } else {
                QVec rhs2(sf.sub_frame.ambient_rank());
                for (long i = 0; i < sf.sub_frame.ambient_rank(); ++i)
                    rhs2[i] = mid[i] - sf.sub_frame.base.expo[i];
                auto tloc = solve_linear(QMat::from_int(sf.sub_frame.dir), rhs2);
                if (!tloc)
                    throw std::logic_error("check_crossing_identity: bad crossing point");
                val = fast_mean(res, *tloc, cfg) * std::log(cfg.q);
            }
            std::ostringstream os;
            os << "component " << ci;
            rep.contributions.push_back({os.str(), sign * val});
            rhs += sign * val;
        }
    }
    std::complex<double> lhs = i2 - i1;
    rep.scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    rep.lhs_minus_rhs = std::abs(lhs - rhs);
    rep.pass = rep.lhs_minus_rhs <= cfg.tolerance * rep.scale;
    (void)rs;
    return rep;
}

namespace {

bool mergeable_at_origin(const Factored& value, const Coset& frame, const QVec& origin,
                         QVec& t_out) {
    QVec rhs(frame.ambient_rank());
    for (long i = 0; i < frame.ambient_rank(); ++i)
        rhs[i] = origin[i] - frame.base.expo[i];
    auto t = solve_linear(QMat::from_int(frame.dir), rhs);
    if (!t) return false;
    t_out = *t;
    for (const auto& term : value.terms)
        for (const auto& fac : term.factors) {
            if (fac.mult >= 0) continue;
            Rational v = fac.cexpo;
            for (long i = 0; i < frame.dim(); ++i) v += Rational(fac.m[i]) * t_out[i];
            if (v.is_zero()) return false;
        }
    return true;
}

} // namespace

std::complex<double> term_value_numeric(const CosetGroup& g, const Factored& f,
                                        const RootSystem& rs, const NumericConfig& cfg) {
    std::complex<double> total(0.0, 0.0);
    const double logq = std::log(cfg.q);
    for (const auto& ct : g.chains) {
        FramedFunction r = iterated_residue(f, ct.chain, rs);
        if (r.fn.is_zero()) continue;
        double measure = std::pow(logq, static_cast<double>(ct.chain.steps.size()));
        if (g.coset.dim() == 0) {
            Field v = r.fn.evaluate(TorusPoint({}, {}));
            total += ct.total.to_double() * v.to_complex(cfg.q) * measure;
            continue;
        }
        QVec t_origin;
        if (mergeable_at_origin(r.fn, r.frame, g.origin, t_origin)) {
            total += ct.total.to_double() * fast_mean(r.fn, t_origin, cfg) * measure;
        } else {
            for (size_t qi = 0; qi < ct.per_chamber.size(); ++qi) {
                if (ct.per_chamber[qi].is_zero()) continue;
                QVec eval_pt = g.eval_point(qi);
                QVec rhs(r.frame.ambient_rank());
                for (long i = 0; i < r.frame.ambient_rank(); ++i)
                    rhs[i] = eval_pt[i] - r.frame.base.expo[i];
                auto t = solve_linear(QMat::from_int(r.frame.dir), rhs);
                if (!t) throw std::logic_error("term_value_numeric: bad evaluation point");
                total += ct.per_chamber[qi].to_double() * fast_mean(r.fn, *t, cfg) * measure;
            }
        }
    }
    return total;
}

Field term_value_exact(const CosetGroup& g, const Factored& f, const RootSystem& rs) {
    if (g.coset.dim() != 0)
        throw std::invalid_argument("term_value_exact: point cosets only");
    return apply_datum(g.datum(), f, g.coset.base, rs);
}

CheckReport check_full_decomposition(const Factored& f, const Decomposition& dec,
                                     const RootSystem& rs, const NumericConfig& cfg) {
    CheckReport rep;
    std::complex<double> lhs = quadrature_integral(f, dec.start, cfg);
    std::complex<double> rhs(0.0, 0.0);
    for (const auto& g : dec.groups) {
        std::complex<double> v = term_value_numeric(g, f, rs, cfg);
        rep.contributions.push_back({g.coset.key(), v});
        rhs += v;
    }
    rep.scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    rep.lhs_minus_rhs = std::abs(lhs - rhs);
    rep.pass = rep.lhs_minus_rhs <= cfg.tolerance * rep.scale;
    std::ostringstream os;
    os << "lhs=" << lhs.real() << (lhs.imag() < 0 ? "-" : "+") << std::abs(lhs.imag())
       << "i rhs=" << rhs.real() << (rhs.imag() < 0 ? "-" : "+") << std::abs(rhs.imag()) << "i";
    rep.message = os.str();
    return rep;
}

} // namespace rescalc
