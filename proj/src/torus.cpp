#include "rescalc/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rescalc {

TorusPoint::TorusPoint(QVec ph, QVec ex) : phase(std::move(ph)), expo(std::move(ex)) {
    if (phase.size() != expo.size())
        throw std::invalid_argument("TorusPoint: phase/exponent length mismatch");
    for (auto& p : phase) p = p.mod1();
}

std::pair<Rational, Rational> TorusPoint::monomial(const IVec& m) const {
    if (static_cast<long>(m.size()) != rank())
        throw std::invalid_argument("TorusPoint::monomial: length mismatch");
    Rational ph, ex;
    for (size_t i = 0; i < m.size(); ++i) {
        ph += Rational(m[i]) * phase[i];
        ex += Rational(m[i]) * expo[i];
    }
    return {ph.mod1(), ex};
}

Field TorusPoint::monomial_value(const IVec& m) const {
    auto [ph, ex] = monomial(m);
    return Field::zeta_q(ph, ex);
}

TorusPoint TorusPoint::apply(const IMat& w) const {
    QVec ph = mat_vec_q(w, phase);
    QVec ex = mat_vec_q(w, expo);
    return TorusPoint(std::move(ph), std::move(ex));
}

bool Hypersurface::contains(const TorusPoint& p) const {
    auto [ph, ex] = p.monomial(form);
    return ph == cphase.mod1() && ex == cexpo;
}

bool Coset::contains(const TorusPoint& p) const {
    for (long i = 0; i < defining.rows; ++i) {
        auto [ph, ex] = p.monomial(defining.row(i));
        if (!(ph == defvals[i].first && ex == defvals[i].second)) return false;
    }
    return true;
}

bool Coset::same_coset(const Coset& other) const { return key() == other.key(); }

std::string Coset::key() const {
    std::ostringstream os;
    os << defining.rows << "x" << defining.cols << ":";
    for (const auto& x : defining.a) os << x << ",";
    os << "|";
    for (const auto& [ph, ex] : defvals) os << ph.str() << ";" << ex.str() << ",";
    return os.str();
}

Coset Coset::make(TorusPoint base, IMat dir) {
    Coset c;
    c.base = std::move(base);
    long n = c.base.rank();
    if (dir.rows != n) throw std::invalid_argument("Coset::make: direction shape");
    c.dir = std::move(dir);
    // defining rows: canonical basis of the forms vanishing on the direction
    IMat ker = integer_kernel(c.dir.transposed()); // columns k with dir^T k = 0
    IMat h = hermite_column_basis(ker);
    c.defining = h.transposed();
    c.defvals.resize(c.defining.rows);
    for (long i = 0; i < c.defining.rows; ++i)
        c.defvals[i] = c.base.monomial(c.defining.row(i));
    return c;
}

Coset Coset::full_torus(long rank) {
    TorusPoint p(QVec(rank, Rational(0)), QVec(rank, Rational(0)));
    return make(std::move(p), IMat::identity(rank));
}

Coset Coset::apply(const IMat& w) const {
    return make(base.apply(w), w * dir);
}

TorusPoint Coset::local_coords(const TorusPoint& p) const {
    IMat li = integer_left_inverse(dir); // d x n
    QVec dph(p.rank()), dex(p.rank());
    for (long i = 0; i < p.rank(); ++i) {
        dph[i] = (p.phase[i] - base.phase[i]).mod1();
        dex[i] = p.expo[i] - base.expo[i];
    }
    TorusPoint diff(std::move(dph), std::move(dex));
    QVec yph(dim()), yex(dim());
    for (long k = 0; k < dim(); ++k) {
        auto [ph, ex] = diff.monomial(li.row(k));
        yph[k] = ph;
        yex[k] = ex;
    }
    return TorusPoint(std::move(yph), std::move(yex));
}

TorusPoint Coset::global_point(const TorusPoint& y) const {
    if (y.rank() != dim()) throw std::invalid_argument("global_point: dimension mismatch");
    QVec ph = base.phase, ex = base.expo;
    for (long i = 0; i < ambient_rank(); ++i) {
        for (long k = 0; k < dim(); ++k) {
            ph[i] += Rational(dir(i, k)) * y.phase[k];
            ex[i] += Rational(dir(i, k)) * y.expo[k];
        }
    }
    return TorusPoint(std::move(ph), std::move(ex));
}

std::vector<Coset> component_split(
    long rank, const std::vector<std::pair<IVec, std::pair<Rational, Rational>>>& equations) {
    if (equations.empty()) return {Coset::full_torus(rank)};
    long k = static_cast<long>(equations.size());
    IMat m(k, rank);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < rank; ++j) m(i, j) = equations[i].first[j];
    SmithResult s = smith_normal_form(m);
    long r = s.rank;
    // exponents: solve m e = E over Q
    QVec target_ex(k);
    for (long i = 0; i < k; ++i) target_ex[i] = equations[i].second.second;
    auto e_sol = solve_linear(QMat::from_int(m), target_ex);
    if (!e_sol) return {};
    // phases: m p = P mod 1;   p = v p',  d p' = u P mod 1
    QVec target_ph(k);
    for (long i = 0; i < k; ++i) target_ph[i] = equations[i].second.first;
    QVec up = mat_vec_q(s.u, target_ph);
    // rows beyond the rank must be integral
    for (long i = r; i < k; ++i)
        if (!up[i].mod1().is_zero()) return {};
    // enumerate the finite solutions per invariant factor
    std::vector<std::vector<Rational>> choices(r);
    for (long i = 0; i < r; ++i) {
        BigInt di = s.d(i, i);
        Rational base = up[i] / Rational(di);
        long dl = di.convert_to<long>();
        for (long t = 0; t < dl; ++t)
            choices[i].push_back((base + Rational(t, dl)).mod1());
    }
    IMat dir = integer_kernel(m);
    std::vector<Coset> out;
    std::vector<long> idx(r, 0);
    for (;;) {
        QVec pprime(rank, Rational(0));
        for (long i = 0; i < r; ++i) pprime[i] = choices[i][idx[i]];
        QVec p = mat_vec_q(s.v, pprime);
        TorusPoint base(std::move(p), *e_sol);
        out.push_back(Coset::make(std::move(base), dir));
        long pos = r - 1;
        while (pos >= 0) {
            if (++idx[pos] < static_cast<long>(choices[pos].size())) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    // canonical order + dedup
    std::sort(out.begin(), out.end(),
              [](const Coset& a, const Coset& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Coset& a, const Coset& b) { return a.key() == b.key(); }),
              out.end());
    return out;
}

std::vector<int> Arrangement::through(const TorusPoint& p) const {
    std::vector<int> out;
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].contains(p)) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Arrangement::through_coset(const Coset& a) const {
    std::vector<int> out;
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& h = components[i];
        // contains the whole coset iff form vanishes on the direction and holds at base
        IVec fd = vec_mat(h.form, a.dir);
        bool flat = std::all_of(fd.begin(), fd.end(), [](const BigInt& x) { return x == 0; });
        if (flat && h.contains(a.base)) out.push_back(static_cast<int>(i));
    }
    return out;
}

int Arrangement::find(const Hypersurface& h) const {
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i] == h) return static_cast<int>(i);
    return -1;
}

bool regular_test(const TorusPoint& p, const Coset& a, const Arrangement& arr) {
    if (!a.contains(p)) throw std::invalid_argument("regular_test: point not on the coset");
    for (const auto& h : arr.components) {
        if (!h.contains(p)) continue;
        // does h contain all of a?
        IVec fd = vec_mat(h.form, a.dir);
        bool flat = std::all_of(fd.begin(), fd.end(), [](const BigInt& x) { return x == 0; });
        if (!(flat && h.contains(a.base))) return false;
    }
    return true;
}

QVec origin_real_part(const Coset& a, const QMat& gram) {
    long d = a.dim();
    QVec e0 = a.base.expo;
    if (d == 0) return e0;
    // minimize (e0 + B t)^T G (e0 + B t):  (B^T G B) t = -B^T G e0
    QMat b = QMat::from_int(a.dir);
    QMat bt = b.transposed();
    QMat btg = bt * gram;
    QMat lhs = btg * b;
    QVec rhs = mat_vec(btg, e0);
    for (auto& x : rhs) x = -x;
    auto t = solve_linear(lhs, rhs);
    if (!t) throw std::logic_error("origin_real_part: normal equations inconsistent");
    QVec r = e0;
    for (long i = 0; i < a.ambient_rank(); ++i)
        for (long k = 0; k < d; ++k) r[i] += Rational(a.dir(i, k)) * (*t)[k];
    return r;
}

namespace {

// Exact angular comparator for nonzero integer vectors in the plane.
int half_plane(const IVec& v) {
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
}

BigInt cross(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const IVec& a, const IVec& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

} // namespace

ChamberSet chambers(const Coset& a, const Arrangement& arr, const RootSystem* rs) {
    ChamberSet out;
    long d = a.dim();
    // restricted central forms, primitive, sign-canonical, deduplicated
    std::vector<IVec> forms;
    for (const auto& h : arr.components) {
        IVec f = vec_mat(h.form, a.dir);
        if (std::all_of(f.begin(), f.end(), [](const BigInt& x) { return x == 0; })) continue;
        f = primitive(f);
        if (lex_sign(f) < 0)
            for (auto& x : f) x = -x;
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
    }
    std::sort(forms.begin(), forms.end());
    out.forms = forms;
    auto signs_of = [&](const QVec& w) {
        std::vector<int> s(forms.size());
        for (size_t i = 0; i < forms.size(); ++i) {
            Rational v;
            for (long j = 0; j < d; ++j) v += Rational(forms[i][j]) * w[j];
            s[i] = v.sign();
        }
        return s;
    };
    if (d == 0 || forms.empty()) {
        Chamber c;
        c.witness = QVec(d, Rational(0));
        c.signs = signs_of(c.witness);
        out.chambers.push_back(std::move(c));
        return out;
    }
    if (d == 1) {
        for (int sgn : {1, -1}) {
            Chamber c;
            c.witness = QVec{Rational(sgn)};
            c.signs = signs_of(c.witness);
            out.chambers.push_back(std::move(c));
        }
        return out;
    }
    if (d == 2) {
        // sort the boundary rays by angle; chambers are the sectors between
        // consecutive distinct rays
        std::vector<IVec> rays;
        for (const auto& f : forms) {
            IVec r1{f[1], -f[0]}, r2{-f[1], f[0]};
            rays.push_back(r1);
            rays.push_back(r2);
        }
        std::sort(rays.begin(), rays.end(), angle_less);
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        size_t m = rays.size();
        for (size_t i = 0; i < m; ++i) {
            const IVec& r1 = rays[i];
            const IVec& r2 = rays[(i + 1) % m];
            auto l1 = [&](const IVec& v) {
                BigInt s = 0;
                for (const auto& x : v) s += (x < 0 ? -x : x);
                return s;
            };
            Chamber c;
            if (cross(r1, r2) == 0) {
                // opposite rays: the sector is an open half plane, take the
                // counterclockwise perpendicular as interior direction
                c.witness = QVec{Rational(-r1[1]), Rational(r1[0])};
            } else {
                c.witness = QVec{Rational(r1[0], l1(r1)) + Rational(r2[0], l1(r2)),
                                 Rational(r1[1], l1(r1)) + Rational(r2[1], l1(r2))};
            }
            c.signs = signs_of(c.witness);
            if (std::any_of(c.signs.begin(), c.signs.end(), [](int s) { return s == 0; }))
                throw std::logic_error("chambers: degenerate sector witness");
            out.chambers.push_back(std::move(c));
        }
        return out;
    }
    // dimension >= 3: only the full Coxeter arrangement of a root system is
    // supported; its chambers are the Weyl images of the dominant one.
    if (rs == nullptr || d != rs->rank() || a.dim() != a.ambient_rank())
        throw std::domain_error("chambers: unsupported direction dimension");
    {
        bool all_coroots = true;
        for (const auto& rt : rs->positive_roots()) {
            IVec f = primitive(rt.coroot);
            if (std::find(forms.begin(), forms.end(), f) == forms.end()) all_coroots = false;
        }
        if (!all_coroots)
            throw std::domain_error("chambers: non-Coxeter arrangement at dimension >= 3");
        QVec dominant(d, Rational(1));
        std::vector<std::vector<int>> seen;
        for (const auto& w : rs->weyl_group()) {
            QVec img = mat_vec_q(w.mat, dominant);
            auto sg = signs_of(img);
            if (std::find(seen.begin(), seen.end(), sg) != seen.end()) continue;
            seen.push_back(sg);
            Chamber c;
            c.witness = img;
            c.signs = sg;
            out.chambers.push_back(std::move(c));
        }
        return out;
    }
}

std::string torus_point_str(const TorusPoint& p) {
    std::ostringstream os;
    os << "exp(";
    for (long i = 0; i < p.rank(); ++i) os << (i ? "," : "") << p.expo[i].str();
    os << ") ph(";
    for (long i = 0; i < p.rank(); ++i) os << (i ? "," : "") << p.phase[i].str();
    os << ")";
    return os.str();
}

} // namespace rescalc
