#include "rescalc/residue.hpp"

#include <algorithm>
#include <sstream>

namespace rescalc {

std::string ResidueChain::key() const {
    std::ostringstream os;
    for (const auto& s : steps) os << s.sub.key() << ">";
    return os.str();
}

const Coset& ResidueChain::target(const Coset& ambient_full) const {
    return steps.empty() ? ambient_full : steps.back().sub;
}

IVec orientation_functional(const Coset& parent, const Coset& sub, const RootSystem& rs) {
    IVec k;
    for (long i = 0; i < sub.defining.rows; ++i) {
        IVec row = sub.defining.row(i);
        IVec rb = vec_mat(row, parent.dir);
        if (std::any_of(rb.begin(), rb.end(), [](const BigInt& x) { return x != 0; })) {
            k = row;
            break;
        }
    }
    if (k.empty())
        throw std::logic_error("orientation_functional: sub-coset not transversal");
    if (parent.dim() == 1) {
        // pin the transversal to the root-positive side of the line: the
        // direction generator is positive when its simple-root coordinates are
        IVec d = parent.dir.col(0);
        QVec dq(d.size());
        for (size_t i = 0; i < d.size(); ++i) dq[i] = Rational(d[i]);
        auto simple = solve_linear(QMat::from_int(rs.cartan()), dq);
        if (!simple) throw std::logic_error("orientation_functional: bad direction");
        int sgn = 0;
        for (const auto& x : *simple) {
            if (!x.is_zero()) { sgn = x.sign(); break; }
        }
        BigInt pairing = dot(d, k);
        if (sgn != 0 && ((sgn > 0) != (pairing > 0)))
            for (auto& x : k) x = -x;
    }
    return k;
}

StepFrame step_frame(const Coset& parent_frame, const Coset& sub, const RootSystem& rs) {
    StepFrame sf;
    long d = parent_frame.dim();
    if (sub.dim() != d - 1)
        throw std::logic_error("step_frame: sub-coset must drop the dimension by one");
    IVec k = orientation_functional(parent_frame, sub, rs);
    IVec mbar = vec_mat(k, parent_frame.dir);
    sf.local_form = primitive(mbar); // primitive() keeps the side of k
    TorusPoint y0 = parent_frame.local_coords(sub.base);
    sf.value = y0.monomial(sf.local_form);
    // SNF of the single row: u * row * V = (1, 0, ..., 0)
    IMat row(1, d);
    for (long j = 0; j < d; ++j) row(0, j) = sf.local_form[j];
    SmithResult snf = smith_normal_form(row);
    if (snf.d(0, 0) != 1) throw std::logic_error("step_frame: form not primitive");
    IMat v = snf.v;
    if (snf.u(0, 0) == -1)
        for (long i = 0; i < d; ++i) v(i, 0) = -v(i, 0);
    sf.v = v;
    // recursion frame: base at w = (value, 1, ..., 1), directions B * V[:,1:]
    QVec yph(d, Rational(0)), yex(d, Rational(0));
    for (long j = 0; j < d; ++j) {
        yph[j] = (sf.value.first * Rational(v(j, 0))).mod1();
        yex[j] = sf.value.second * Rational(v(j, 0));
    }
    TorusPoint ypt(std::move(yph), std::move(yex));
    TorusPoint base = parent_frame.global_point(ypt);
    IMat dirs(parent_frame.ambient_rank(), d - 1);
    IMat bv = parent_frame.dir * v;
    for (long i = 0; i < dirs.rows; ++i)
        for (long j = 0; j < d - 1; ++j) dirs(i, j) = bv(i, j + 1);
    sf.sub_frame = Coset::make(std::move(base), std::move(dirs));
    if (!(sf.sub_frame.key() == sub.key()))
        throw std::logic_error("step_frame: reconstructed frame mismatch");
    return sf;
}

namespace {

// Unit power series over Q, relative coefficients c[0..T].
using USeries = std::vector<Rational>;

USeries u_mul(const USeries& a, const USeries& b, long t) {
    USeries r(t + 1, Rational(0));
    for (long i = 0; i <= t && i < static_cast<long>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= t && j < static_cast<long>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

USeries u_inv(const USeries& a, long t) {
    if (a.empty() || a[0].is_zero()) throw std::logic_error("u_inv: not a unit series");
    USeries r(t + 1, Rational(0));
    Rational lead = Rational(1) / a[0];
    r[0] = lead;
    for (long k = 1; k <= t; ++k) {
        Rational acc;
        for (long j = 1; j <= k; ++j)
            if (j < static_cast<long>(a.size())) acc += a[j] * r[k - j];
        r[k] = -(lead * acc);
    }
    return r;
}

USeries u_pow(const USeries& a, long e, long t) {
    USeries base = e >= 0 ? a : u_inv(a, t);
    long n = e >= 0 ? e : -e;
    USeries r(1, Rational(1));
    for (long i = 0; i < n; ++i) r = u_mul(r, base, t);
    return r;
}

// (1 + tau)^p through relative order t.
USeries one_plus_tau_pow(long p, long t) {
    USeries r(t + 1);
    for (long k = 0; k <= t; ++k) r[k] = generalized_binomial(p, k);
    return r;
}

std::vector<Factored> f_series_mul(const std::vector<Factored>& a,
                                   const std::vector<Factored>& b, long t, long nvars) {
    std::vector<Factored> r(t + 1, Factored(nvars));
    for (long i = 0; i <= t && i < static_cast<long>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; i + j <= t && j < static_cast<long>(b.size()); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

} // namespace

Factored residue_step(const Factored& g, const StepFrame& sf) {
    long d = sf.v.rows;
    long dn = d - 1;
    IMat vt = sf.v.transposed();
    Factored result(dn);
    const Rational vph = sf.value.first;
    const Rational vex = sf.value.second;
    const Field logq_inv = Field::one().with_logq(-1);
    for (const auto& term_in : g.terms) {
        IVec mono = mat_vec(vt, term_in.mono);
        long mono1 = mono[0].convert_to<long>();
        IVec mono_prime(mono.begin() + 1, mono.end());
        struct WFactor {
            long a;
            IVec mprime;
            Rational cph, cex;
            long mult;
        };
        std::vector<WFactor> regular;
        std::vector<std::pair<long, long>> vanishing; // (exponent a, multiplicity)
        long val = 0;
        for (const auto& f : term_in.factors) {
            IVec m = mat_vec(vt, f.m);
            long a = m[0].convert_to<long>();
            IVec mprime(m.begin() + 1, m.end());
            bool mp_zero = std::all_of(mprime.begin(), mprime.end(),
                                       [](const BigInt& x) { return x == 0; });
            if (mp_zero && a != 0 && (f.cphase + Rational(a) * vph).mod1().is_zero() &&
                (f.cexpo + Rational(a) * vex).is_zero()) {
                vanishing.emplace_back(a, f.mult);
                val += f.mult;
            } else {
                regular.push_back({a, std::move(mprime), f.cphase, f.cexpo, f.mult});
            }
        }
        if (val >= 0) continue; // no pole along the sub-coset
        const long t = -1 - val; // relative order needed to read tau^{-1}
        // scalar unit series: prod over vanishing of U_a^{mult} times
        // (1+tau)^{mono1 - 1}, where (1 - (1+tau)^a) = tau * U_a(tau)
        USeries master = one_plus_tau_pow(mono1 - 1, t);
        for (const auto& [a, e] : vanishing) {
            USeries ua(t + 1);
            for (long k = 0; k <= t; ++k) ua[k] = -generalized_binomial(a, k + 1);
            master = u_mul(master, u_pow(ua, e, t), t);
        }
        // factored-coefficient series of the remaining factors
        std::vector<Factored> prod(t + 1, Factored(dn));
        prod[0] = Factored::constant(dn, Field::one());
        for (const auto& f : regular) {
            if (f.a == 0) {
                // constant in tau: a plain factor record on the sub-coset
                Factored rec(dn);
                FTerm rt(dn);
                rt.factors.push_back({f.mprime, f.cph, f.cex, f.mult});
                rec.terms.push_back(std::move(rt));
                rec.normalize();
                for (auto& c : prod)
                    if (!c.is_zero()) c = c * rec;
                continue;
            }
            // F(tau) = (1 - C (1+tau)^a w'^{m'})^{mult} with C = c v^a;
            // F = F0 (1 - u), u = C w'^{m'} ((1+tau)^a - 1) / F0
            Rational Cph = (f.cph + Rational(f.a) * vph).mod1();
            Rational Cex = f.cex + Rational(f.a) * vex;
            // ((1+tau)^a - 1)^k for k = 0..t; valuation k
            USeries base(t + 1, Rational(0));
            for (long k = 1; k <= t; ++k) base[k] = generalized_binomial(f.a, k);
            std::vector<USeries> pw(t + 1);
            pw[0].assign(1, Rational(1));
            for (long k = 1; k <= t; ++k) pw[k] = u_mul(pw[k - 1], base, t);
            std::vector<Factored> fs(t + 1, Factored(dn));
            for (long k = 0; k <= t; ++k) {
                Rational bin = generalized_binomial(f.mult, k);
                if (bin.is_zero()) continue;
                FTerm piece(dn);
                piece.scalar = Field(bin) * Field(k % 2 ? -1 : 1) *
                               Field::zeta_q((Cph * Rational(k)).mod1(), Cex * Rational(k));
                piece.mono.assign(dn, BigInt(0));
                for (long i = 0; i < dn; ++i) piece.mono[i] = f.mprime[i] * k;
                if (f.mult - k != 0)
                    piece.factors.push_back({f.mprime, Cph, Cex, f.mult - k});
                Factored fpiece(dn);
                fpiece.terms.push_back(std::move(piece));
                fpiece.normalize();
                if (fpiece.is_zero()) continue;
                for (long j = k; j <= t; ++j) {
                    if (j >= static_cast<long>(pw[k].size()) || pw[k][j].is_zero()) continue;
                    Factored add = fpiece * Factored::constant(dn, Field(pw[k][j]));
                    fs[j] = fs[j] + add;
                }
            }
            prod = f_series_mul(prod, fs, t, dn);
        }
        // coefficient of tau^{-1} in tau^{val} master(tau) prod(tau)
        Factored res_term(dn);
        for (long i = 0; i <= t; ++i) {
            if (master[i].is_zero()) continue;
            long j = t - i;
            if (prod[j].is_zero()) continue;
            res_term = res_term + prod[j] * Factored::constant(dn, Field(master[i]));
        }
        if (res_term.is_zero()) continue;
        // scalar, w1-monomial value, remaining monomial, and the 1/log q of
        // the z-normalized residue
        Field scal = term_in.scalar *
                     Field::zeta_q((vph * Rational(mono1)).mod1(), vex * Rational(mono1)) *
                     logq_inv;
        res_term = res_term * Factored::monomial(dn, mono_prime, scal);
        result = result + res_term;
    }
    result.normalize();
    return result;
}

FramedFunction iterated_residue(const Factored& f, const ResidueChain& chain,
                                const RootSystem& rs) {
    FramedFunction cur;
    cur.frame = Coset::full_torus(rs.rank());
    cur.fn = f;
    for (const auto& step : chain.steps) {
        StepFrame sf = step_frame(cur.frame, step.sub, rs);
        cur.fn = residue_step(cur.fn, sf);
        cur.frame = sf.sub_frame;
        if (cur.fn.is_zero()) break;
    }
    return cur;
}

Field apply_datum(const ResidueDatum& datum, const Factored& f, const TorusPoint& p,
                  const RootSystem& rs) {
    Field total = Field::zero();
    for (const auto& [coef, chain] : datum.chains) {
        FramedFunction r = iterated_residue(f, chain, rs);
        if (r.fn.is_zero()) continue;
        TorusPoint y = r.frame.local_coords(p);
        Field v = r.fn.evaluate(y);
        // mass-one measure normalization: one factor of log q per level
        v = v.with_logq(v.logq_power() + static_cast<long>(chain.steps.size()));
        total += Field(coef) * v;
    }
    return total;
}

} // namespace rescalc
