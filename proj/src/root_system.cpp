#include "rescalc/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rescalc {

namespace {

constexpr long kWeylCap = 60000;

IMat cartan_matrix(const std::string& type, int rank, std::vector<Rational>& half_norms) {
    auto bad = [&]() {
        throw std::invalid_argument("unsupported root system: " + type + " rank " +
                                    std::to_string(rank));
    };
    if (rank < 1 || rank > 6) bad();
    IMat c(rank, rank);
    for (int i = 0; i < rank; ++i) c(i, i) = 2;
    half_norms.assign(rank, Rational(1));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) { c(i, i + 1) = -1; c(i + 1, i) = -1; }
    };
    if (type == "A") {
        chain(rank);
    } else if (type == "B") {
        if (rank < 2) bad();
        chain(rank);
        // alpha_rank is short: <alpha_{n-1}, alpha_n^vee> = -2
        c(rank - 1, rank - 2) = -2;
        for (int i = 0; i < rank - 1; ++i) half_norms[i] = Rational(2);
    } else if (type == "C") {
        if (rank < 2) bad();
        chain(rank);
        // alpha_rank is long: <alpha_n, alpha_{n-1}^vee> = -2
        c(rank - 2, rank - 1) = -2;
        half_norms[rank - 1] = Rational(2);
    } else if (type == "D") {
        if (rank < 3) bad();
        chain(rank - 1);
        c(rank - 3, rank - 1) = -1;
        c(rank - 1, rank - 3) = -1;
    } else if (type == "G2") {
        if (rank != 2) bad();
        // alpha_1 short, alpha_2 long
        c(0, 1) = -3;
        c(1, 0) = -1;
        half_norms[1] = Rational(3);
    } else {
        bad();
    }
    return c;
}

} // namespace

RootSystem RootSystem::build(const std::string& type, int rank) {
    RootSystem r;
    r.type_ = type;
    r.rank_ = rank;
    r.cartan_ = cartan_matrix(type, rank, r.half_norms_);
    r.compute_gram();
    r.generate_roots();
    return r;
}

void RootSystem::compute_gram() {
    // Gram on z-coordinates: G = C^{-T} S C^{-1} where S_ij = (alpha_i, alpha_j)
    // and C has columns the z-coordinates of the simple roots, i.e. C = cartan_.
    QMat s(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s(i, j) = half_norms_[i] * Rational(cartan_(i, j));
    QMat cinv = invert(QMat::from_int(cartan_));
    gram_ = cinv.transposed() * s * cinv;
}

void RootSystem::generate_roots() {
    // Orbit of the simple roots under the simple reflections, in
    // simple-root coordinates: s_i(v)_j = v_j - <sum v_k alpha_k, alpha_i^vee> delta_ij.
    auto reflect = [&](const IVec& v, int i) {
        BigInt pairing = 0;
        for (int k = 0; k < rank_; ++k) pairing += cartan_(i, k) * v[k];
        IVec w = v;
        w[i] -= pairing;
        return w;
    };
    std::set<IVec> seen;
    std::vector<IVec> queue;
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, BigInt(0));
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    for (size_t h = 0; h < queue.size(); ++h) {
        for (int i = 0; i < rank_; ++i) {
            IVec w = reflect(queue[h], i);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    Rational min_norm;
    bool first = true;
    std::vector<Root> roots;
    for (const auto& v : seen) {
        bool pos = lex_sign(v) > 0;
        if (!pos) continue;
        Root rt;
        rt.simple_coords = v;
        rt.weight_coords = mat_vec(cartan_, v);
        // (gamma,gamma) = sum_ij v_i v_j (alpha_i,alpha_j)
        Rational n2;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                n2 += Rational(v[i] * v[j]) * half_norms_[i] * Rational(cartan_(i, j));
        rt.norm2 = n2;
        // coroot over simple coroots: gamma^vee = sum v_i d_i / (n2/2) alpha_i^vee
        rt.coroot.assign(rank_, BigInt(0));
        Rational half = n2 / Rational(2);
        for (int i = 0; i < rank_; ++i) {
            Rational c = Rational(v[i]) * half_norms_[i] / half;
            if (!c.is_integer())
                throw std::logic_error("root closure produced a non-integral coroot");
            rt.coroot[i] = c.num();
        }
        if (first || n2 < min_norm) { min_norm = n2; first = false; }
        roots.push_back(std::move(rt));
    }
    for (auto& rt : roots) rt.is_long = rt.norm2 > min_norm;
    for (const auto& rt : roots)
        if (rt.is_long) two_lengths_ = true;
    // sanity: <gamma, gamma^vee> = 2
    for (const auto& rt : roots) {
        BigInt p = 0;
        for (int i = 0; i < rank_; ++i) p += rt.coroot[i] * rt.weight_coords[i];
        if (p != 2) throw std::logic_error("coroot pairing check failed");
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.simple_coords < b.simple_coords;
    });
    positive_ = std::move(roots);
}

std::pair<int, int> RootSystem::find_root(const IVec& w) const {
    for (size_t i = 0; i < positive_.size(); ++i) {
        if (positive_[i].weight_coords == w) return {static_cast<int>(i), 1};
        IVec neg = positive_[i].weight_coords;
        for (auto& x : neg) x = -x;
        if (neg == w) return {static_cast<int>(i), -1};
    }
    return {-1, 0};
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
    if (!weyl_.empty()) return weyl_;
    std::vector<IMat> gens;
    for (int i = 0; i < rank_; ++i) {
        // s_i : z -> z - z_i * vec(alpha_i)
        IMat m = IMat::identity(rank_);
        for (int r = 0; r < rank_; ++r) m(r, i) -= cartan_(r, i);
        gens.push_back(m);
    }
    std::map<IMat, size_t> index;
    WeylElement id;
    id.mat = IMat::identity(rank_);
    weyl_.push_back(id);
    index[weyl_[0].mat] = 0;
    for (size_t h = 0; h < weyl_.size(); ++h) {
        WeylElement cur = weyl_[h]; // copy: weyl_ may reallocate
        for (int i = 0; i < rank_; ++i) {
            IMat m = gens[i] * cur.mat;
            if (index.count(m)) continue;
            WeylElement w;
            w.mat = std::move(m);
            w.word = cur.word;
            w.word.insert(w.word.begin(), i); // left multiplication
            w.length = cur.length + 1;
            index[w.mat] = weyl_.size();
            weyl_.push_back(std::move(w));
            if (static_cast<long>(weyl_.size()) > kWeylCap)
                throw std::domain_error("Weyl group size cap exceeded");
        }
    }
    return weyl_;
}

size_t RootSystem::weyl_index(const IMat& m) const {
    const auto& w = weyl_group();
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i].mat == m) return i;
    throw std::logic_error("matrix is not a Weyl element");
}

LeviSubset RootSystem::levi(const std::vector<int>& omega) const {
    LeviSubset l;
    l.omega = omega;
    std::sort(l.omega.begin(), l.omega.end());
    for (size_t i = 0; i < positive_.size(); ++i) {
        bool in_span = true;
        for (int k = 0; k < rank_; ++k) {
            if (positive_[i].simple_coords[k] == 0) continue;
            if (std::find(l.omega.begin(), l.omega.end(), k) == l.omega.end()) {
                in_span = false;
                break;
            }
        }
        if (in_span) l.subsystem.push_back(static_cast<int>(i));
    }
    IMat forms(static_cast<long>(l.omega.size()), rank_);
    for (size_t r = 0; r < l.omega.size(); ++r) {
        // coroot form of the simple root: the basis row e_{omega[r]}
        forms(static_cast<long>(r), l.omega[r]) = 1;
    }
    l.direction = integer_kernel(forms);
    return l;
}

std::vector<size_t> RootSystem::minimal_coset_reps(const LeviSubset& levi) const {
    const auto& w = weyl_group();
    std::vector<size_t> reps;
    for (size_t i = 0; i < w.size(); ++i) {
        bool minimal = true;
        for (int k : levi.omega) {
            IVec img = mat_vec(w[i].mat, positive_[k].weight_coords);
            auto [idx, sign] = find_root(img);
            if (idx < 0) throw std::logic_error("Weyl image is not a root");
            if (sign < 0) { minimal = false; break; }
        }
        if (minimal) reps.push_back(i);
    }
    return reps;
}

namespace {

std::set<std::set<int>> weyl_images_of_subsystem(const RootSystem& rs,
                                                 const LeviSubset& levi) {
    std::set<std::set<int>> images;
    for (const auto& w : rs.weyl_group()) {
        std::set<int> img;
        for (int idx : levi.subsystem) {
            IVec v = mat_vec(w.mat, rs.positive_roots()[idx].weight_coords);
            auto [ri, sign] = rs.find_root(v);
            if (ri < 0) throw std::logic_error("Weyl image is not a root");
            img.insert(ri);
        }
        images.insert(std::move(img));
    }
    return images;
}

} // namespace

long RootSystem::count_conjugate_standard_levis(const LeviSubset& levi) const {
    auto images = weyl_images_of_subsystem(*this, levi);
    long count = 0;
    std::vector<int> all(rank_);
    for (int i = 0; i < rank_; ++i) all[i] = i;
    for (long mask = 0; mask < (1L << rank_); ++mask) {
        std::vector<int> omega;
        for (int i = 0; i < rank_; ++i)
            if (mask & (1L << i)) omega.push_back(i);
        LeviSubset cand = this->levi(omega);
        if (cand.subsystem.size() != levi.subsystem.size()) continue;
        std::set<int> roots(cand.subsystem.begin(), cand.subsystem.end());
        if (images.count(roots)) ++count;
    }
    return count;
}

long RootSystem::orbit_count_check(const LeviSubset& levi, long chambers) const {
    // |P_S(M')| * |W_{Delta_O, M'}| / |W(M', O)|; in the unramified model the
    // middle factor is 1, and W(M',O) = {w : w Sigma_Omega = Sigma_Omega} / W_Omega.
    const auto& wg = weyl_group();
    std::set<int> target(levi.subsystem.begin(), levi.subsystem.end());
    long stab = 0;
    for (const auto& w : wg) {
        bool ok = true;
        for (int idx : levi.subsystem) {
            IVec v = mat_vec(w.mat, positive_[idx].weight_coords);
            auto [ri, sign] = find_root(v);
            if (ri < 0 || !target.count(ri)) { ok = false; break; }
        }
        if (ok) ++stab;
    }
    long w_levi = 1;
    {
        // order of W_Omega: subgroup generated by reflections in omega;
        // count Weyl elements fixing every positive root outside the subsystem's span
        // is awkward; instead build it from the sub-root-system directly.
        std::set<IMat> sub;
        std::vector<IMat> gens;
        for (int k : levi.omega) {
            IMat m = IMat::identity(rank_);
            for (int r = 0; r < rank_; ++r) m(r, k) -= cartan_(r, k);
            gens.push_back(m);
        }
        std::vector<IMat> queue{IMat::identity(rank_)};
        sub.insert(queue[0]);
        for (size_t h = 0; h < queue.size(); ++h)
            for (const auto& g : gens) {
                IMat m = g * queue[h];
                if (sub.insert(m).second) queue.push_back(m);
            }
        w_levi = static_cast<long>(sub.size());
    }
    long w_m_o = stab / w_levi;
    if (stab % w_levi != 0)
        throw std::logic_error("orbit_count_check: stabilizer not divisible by |W_Omega|");
    if (chambers % w_m_o != 0)
        throw std::logic_error("orbit_count_check: non-divisibility signals an upstream bug");
    return chambers / w_m_o;
}

} // namespace rescalc
