#include "rescalc/walk.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rescalc {

QVec CosetGroup::eval_point(size_t chamber_index) const {
    const auto& ch = chamber_set.chambers.at(chamber_index);
    QVec p = origin;
    for (long i = 0; i < coset.ambient_rank(); ++i)
        for (long k = 0; k < coset.dim(); ++k)
            p[i] += Rational(coset.dir(i, k)) * ch.witness[k] * eps_scale;
    return p;
}

ResidueDatum CosetGroup::datum() const {
    ResidueDatum d;
    d.target = coset;
    for (const auto& c : chains)
        if (!c.total.is_zero()) d.chains.push_back({c.total, c.chain});
    return d;
}

const CosetGroup* Decomposition::find(const Coset& c) const {
    std::string k = c.key();
    for (const auto& g : groups)
        if (g.coset.key() == k) return &g;
    return nullptr;
}

ResidueDatum Decomposition::datum_at(const Coset& c) const {
    const CosetGroup* g = find(c);
    if (g) return g->datum();
    ResidueDatum d;
    d.target = c;
    return d;
}

namespace {

struct Rng {
    unsigned long state;
    explicit Rng(unsigned long seed)
        : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    long next(long lo, long hi) { // inclusive
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        unsigned long x = (state >> 33);
        return lo + static_cast<long>(x % static_cast<unsigned long>(hi - lo + 1));
    }
};

struct LocalWall {
    IVec form;        // primitive, sign-canonical in frame coordinates
    Rational level;   // wall { <t, form> = level } in frame coordinates
    std::vector<int> comps; // arrangement components over this real wall
};

struct Walker {
    const Arrangement& arr;
    const RootSystem& rs;
    QMat gram;
    Rng rng;
    Decomposition& out;
    std::map<std::string, size_t> group_index;

    Walker(const Arrangement& a, const RootSystem& r, Decomposition& o, unsigned long seed)
        : arr(a), rs(r), gram(r.gram()), rng(seed), out(o) {}

    size_t group_for(const Coset& coset) {
        std::string key = coset.key();
        auto it = group_index.find(key);
        if (it != group_index.end()) return it->second;
        CosetGroup g;
        g.coset = coset;
        g.origin = origin_real_part(coset, gram);
        g.chamber_set = chambers(coset, arr, &rs);
        // shrink the witness scale until every evaluation point clears all
        // walls that do not pass through r(L)
        Rational scale(1, 2);
        bool ok = false;
        for (int iter = 0; iter < 200 && !ok; ++iter) {
            ok = true;
            for (const auto& ch : g.chamber_set.chambers) {
                for (const auto& h : arr.components) {
                    Rational at_origin = -h.cexpo;
                    for (long i = 0; i < coset.ambient_rank(); ++i)
                        at_origin += Rational(h.form[i]) * g.origin[i];
                    Rational drift;
                    for (long i = 0; i < coset.ambient_rank(); ++i) {
                        Rational bi;
                        for (long k = 0; k < coset.dim(); ++k)
                            bi += Rational(coset.dir(i, k)) * ch.witness[k];
                        drift += Rational(h.form[i]) * bi;
                    }
                    drift *= scale;
                    if (at_origin.is_zero()) continue; // wall through r(L)
                    Rational total = at_origin + drift;
                    if (total.is_zero() || total.sign() != at_origin.sign()) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) scale = scale * Rational(1, 2);
        }
        if (!ok) throw walk_error("cannot shrink epsilon witnesses");
        g.eps_scale = scale;
        size_t idx = out.groups.size();
        out.groups.push_back(std::move(g));
        group_index.emplace(std::move(key), idx);
        return idx;
    }

    void add_term(size_t gi, const ResidueChain& chain, size_t chamber, const Rational& w) {
        CosetGroup& g = out.groups[gi];
        std::string key = chain.key();
        for (auto& c : g.chains)
            if (c.chain.key() == key) {
                c.total += w;
                c.per_chamber[chamber] += w;
                return;
            }
        ChainTerm t;
        t.chain = chain;
        t.total = w;
        t.per_chamber.assign(g.chamber_set.chambers.size(), Rational(0));
        t.per_chamber[chamber] = w;
        g.chains.push_back(std::move(t));
    }

    std::vector<LocalWall> local_walls(const Coset& frame) {
        std::vector<LocalWall> walls;
        for (size_t ci = 0; ci < arr.components.size(); ++ci) {
            const auto& h = arr.components[ci];
            IVec mbar = vec_mat(h.form, frame.dir);
            if (std::all_of(mbar.begin(), mbar.end(), [](const BigInt& x) { return x == 0; }))
                continue;
            BigInt cont = content(mbar);
            IVec mp = primitive(mbar);
            auto [bph, bex] = frame.base.monomial(h.form);
            Rational level = (h.cexpo - bex) / Rational(cont);
            if (lex_sign(mp) < 0) {
                for (auto& x : mp) x = -x;
                level = -level;
            }
            bool found = false;
            for (auto& w : walls)
                if (w.form == mp && w.level == level) {
                    w.comps.push_back(static_cast<int>(ci));
                    found = true;
                    break;
                }
            if (!found) walls.push_back({mp, level, {static_cast<int>(ci)}});
        }
        std::sort(walls.begin(), walls.end(), [](const LocalWall& a, const LocalWall& b) {
            return std::tie(a.form, a.level) < std::tie(b.form, b.level);
        });
        return walls;
    }

    struct SubCrossing {
        Coset sub;
        long order;
    };

    std::vector<SubCrossing> wall_subcosets(const Coset& frame, const Factored& g,
                                            const LocalWall& wall) {
        std::map<std::string, SubCrossing> dedup;
        // coordinate change for the wall's primitive form, shared by all roots
        IMat row(1, frame.dim());
        for (long t = 0; t < frame.dim(); ++t) row(0, t) = wall.form[t];
        SmithResult snf = smith_normal_form(row);
        IMat v = snf.v;
        if (snf.u(0, 0) == -1)
            for (long i = 0; i < frame.dim(); ++i) v(i, 0) = -v(i, 0);
        IMat bv = frame.dir * v;
        for (int ci : wall.comps) {
            const auto& h = arr.components[ci];
            IVec mbar = vec_mat(h.form, frame.dir);
            BigInt cont = content(mbar);
            auto [bph, bex] = frame.base.monomial(h.form);
            Rational vph = (h.cphase - bph).mod1();
            Rational vex = h.cexpo - bex;
            if (lex_sign(mbar) < 0) { // the component equation along -form
                vph = (-vph).mod1();
                vex = -vex;
            }
            long c = cont.convert_to<long>();
            for (long j = 0; j < c; ++j) {
                Rational rph = ((vph + Rational(j)) / Rational(c)).mod1();
                Rational rex = vex / Rational(c);
                QVec yph(frame.dim(), Rational(0)), yex(frame.dim(), Rational(0));
                for (long t = 0; t < frame.dim(); ++t) {
                    yph[t] = (rph * Rational(v(t, 0))).mod1();
                    yex[t] = rex * Rational(v(t, 0));
                }
                TorusPoint base =
                    frame.global_point(TorusPoint(std::move(yph), std::move(yex)));
                IMat dirs(frame.ambient_rank(), frame.dim() - 1);
                for (long i = 0; i < dirs.rows; ++i)
                    for (long t = 0; t + 1 < frame.dim(); ++t) dirs(i, t) = bv(i, t + 1);
                Coset sub = Coset::make(std::move(base), std::move(dirs));
                std::string key = sub.key();
                if (dedup.count(key)) continue;
                Hypersurface local;
                local.form = wall.form;
                local.cphase = rph;
                local.cexpo = rex;
                long ord = g.order_along_max(local);
                dedup.emplace(std::move(key), SubCrossing{std::move(sub), ord});
            }
        }
        std::vector<SubCrossing> outv;
        for (auto& [k, vv] : dedup) outv.push_back(std::move(vv));
        return outv;
    }

    struct Crossing {
        Rational s;
        size_t wall_index;
    };

    bool on_any_wall(const std::vector<LocalWall>& walls, const QVec& p) {
        for (const auto& w : walls) {
            Rational f = -w.level;
            for (size_t i = 0; i < w.form.size(); ++i) f += Rational(w.form[i]) * p[i];
            if (f.is_zero()) return true;
        }
        return false;
    }

    std::optional<std::vector<Crossing>> plan_segment(const std::vector<LocalWall>& walls,
                                                      const QVec& from, const QVec& to) {
        std::vector<Crossing> cr;
        for (size_t wi = 0; wi < walls.size(); ++wi) {
            const auto& w = walls[wi];
            Rational f0 = -w.level, f1 = -w.level;
            for (size_t i = 0; i < w.form.size(); ++i) {
                f0 += Rational(w.form[i]) * from[i];
                f1 += Rational(w.form[i]) * to[i];
            }
            if (f0.is_zero() || f1.is_zero()) return std::nullopt;
            if (f0.sign() == f1.sign()) continue;
            Rational s = f0 / (f0 - f1);
            cr.push_back({s, wi});
        }
        std::sort(cr.begin(), cr.end(),
                  [](const Crossing& a, const Crossing& b) { return a.s < b.s; });
        for (size_t i = 0; i + 1 < cr.size(); ++i)
            if (cr[i].s == cr[i + 1].s) return std::nullopt;
        return cr;
    }

    std::vector<std::pair<QVec, QVec>> plan_path(const std::vector<LocalWall>& walls,
                                                 const QVec& from, const QVec& to) {
        if (on_any_wall(walls, from) || on_any_wall(walls, to))
            throw walk_error("path endpoint lies on a wall");
        if (plan_segment(walls, from, to)) return {{from, to}};
        Rational scale(1, 16);
        for (int attempt = 0; attempt < 64; ++attempt) {
            QVec mid(from.size());
            for (size_t i = 0; i < from.size(); ++i)
                mid[i] = (from[i] + to[i]) / Rational(2) +
                         scale * Rational(rng.next(-17, 17), 37 + attempt);
            if (!on_any_wall(walls, mid) && plan_segment(walls, from, mid) &&
                plan_segment(walls, mid, to))
                return {{from, mid}, {mid, to}};
            scale = scale * Rational(3, 4);
        }
        throw walk_error("path degeneracy unresolved after perturbation retries");
    }

    void walk(const Coset& frame, const Factored& g, const QVec& entry,
              const ResidueChain& chain, const Rational& weight, int depth) {
        if (g.is_zero()) return;
        size_t gi = group_for(frame);
        size_t nch = out.groups[gi].chamber_set.chambers.size();
        Rational branch_w = weight / Rational(static_cast<long>(nch));
        std::vector<LocalWall> walls = local_walls(frame);
        for (size_t qi = 0; qi < nch; ++qi) {
            QVec eval = out.groups[gi].eval_point(qi);
            QVec rhs(frame.ambient_rank());
            for (long i = 0; i < frame.ambient_rank(); ++i)
                rhs[i] = eval[i] - frame.base.expo[i];
            auto target = solve_linear(QMat::from_int(frame.dir), rhs);
            if (!target) throw walk_error("evaluation point off the coset");
            add_term(gi, chain, qi, branch_w);
            auto legs = plan_path(walls, entry, *target);
            for (const auto& [a, b] : legs) {
                auto crossings = plan_segment(walls, a, b);
                if (!crossings) throw walk_error("internal: degenerate planned leg");
                for (const auto& cr : *crossings) {
                    const LocalWall& wall = walls[cr.wall_index];
                    QVec p(a.size());
                    for (size_t i = 0; i < a.size(); ++i)
                        p[i] = a[i] + cr.s * (b[i] - a[i]);
                    QVec amb = frame.base.expo;
                    for (long i = 0; i < frame.ambient_rank(); ++i)
                        for (long k = 0; k < frame.dim(); ++k)
                            amb[i] += Rational(frame.dir(i, k)) * p[k];
                    if (depth == 0)
                        out.top_crossings.push_back({wall.comps.front(), amb, qi});
                    auto subs = wall_subcosets(frame, g, wall);
                    for (auto& sc : subs) {
                        if (sc.order <= 0) continue; // no pole: residue vanishes
                        StepFrame sf = step_frame(frame, sc.sub, rs);
                        // side of the canonical orientation form before the
                        // crossing: + side means <t, form> > level
                        Rational fa = -sf.value.second, fb = -sf.value.second;
                        for (long i = 0; i < frame.dim(); ++i) {
                            fa += Rational(sf.local_form[i]) * a[i];
                            fb += Rational(sf.local_form[i]) * b[i];
                        }
                        if (fa.is_zero() || fa.sign() == fb.sign())
                            throw walk_error("internal: crossing side inconsistency");
                        int sign = fa.sign() > 0 ? +1 : -1;
                        Factored gsub = residue_step(g, sf);
                        if (gsub.is_zero()) continue;
                        ResidueChain sub_chain = chain;
                        sub_chain.steps.push_back({sc.sub});
                        QVec srhs(sf.sub_frame.ambient_rank());
                        for (long i = 0; i < sf.sub_frame.ambient_rank(); ++i)
                            srhs[i] = amb[i] - sf.sub_frame.base.expo[i];
                        auto st = solve_linear(QMat::from_int(sf.sub_frame.dir), srhs);
                        if (!st) throw walk_error("crossing point off the sub-coset");
                        walk(sf.sub_frame, gsub, *st, sub_chain,
                             branch_w * Rational(sign), depth + 1);
                    }
                }
            }
        }
    }
};

} // namespace

QVec dominant_start(const Arrangement& arr, const RootSystem& rs, unsigned long seed) {
    long n = rs.rank();
    Rational maxlev(0);
    for (const auto& h : arr.components) {
        Rational a = h.cexpo < Rational(0) ? -h.cexpo : h.cexpo;
        if (a > maxlev) maxlev = a;
    }
    Rng rng(seed * 977 + 13);
    for (int attempt = 0; attempt < 64; ++attempt) {
        QVec r(n);
        for (long i = 0; i < n; ++i)
            r[i] = maxlev + Rational(i + 1) +
                   (seed == 0 ? Rational(0) : Rational(rng.next(0, 40), 41));
        bool regular = true;
        for (const auto& h : arr.components) {
            Rational v = -h.cexpo;
            for (long i = 0; i < n; ++i) v += Rational(h.form[i]) * r[i];
            if (v.is_zero()) { regular = false; break; }
        }
        if (regular) return r;
    }
    throw walk_error("no regular dominant start point found");
}

Decomposition compute_residue_data(const Factored& f, const Arrangement& arr,
                                   const RootSystem& rs, const WalkOptions& opts) {
    if (!arr.im_closed)
        throw std::invalid_argument("compute_residue_data: arrangement must be closed "
                                    "under imaginary parts");
    if (rs.rank() > opts.max_rank)
        throw std::domain_error("compute_residue_data: rank cap exceeded");
    Decomposition dec;
    dec.rank = rs.rank();
    QVec start = dominant_start(arr, rs, opts.seed);
    if (!opts.start_signs.empty()) {
        bool found = false;
        for (const auto& w : rs.weyl_group()) {
            QVec cand = mat_vec_q(w.mat, start);
            std::vector<int> signs;
            for (const auto& rt : rs.positive_roots()) {
                Rational v;
                for (long i = 0; i < rs.rank(); ++i) v += Rational(rt.coroot[i]) * cand[i];
                signs.push_back(v.sign());
            }
            if (signs == opts.start_signs) {
                start = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("start chamber signs not realizable");
    }
    dec.start = start;
    Walker walker(arr, rs, dec, opts.seed);
    Coset top = Coset::full_torus(rs.rank());
    ResidueChain empty;
    walker.walk(top, f, start, empty, Rational(1), 0);
    for (auto& g : dec.groups) {
        g.chains.erase(std::remove_if(g.chains.begin(), g.chains.end(),
                                      [](const ChainTerm& c) { return c.total.is_zero(); }),
                       g.chains.end());
        std::sort(g.chains.begin(), g.chains.end(), [](const ChainTerm& a, const ChainTerm& b) {
            return a.chain.key() < b.chain.key();
        });
    }
    dec.groups.erase(std::remove_if(dec.groups.begin(), dec.groups.end(),
                                    [](const CosetGroup& g) { return g.chains.empty(); }),
                     dec.groups.end());
    std::sort(dec.groups.begin(), dec.groups.end(),
              [](const CosetGroup& a, const CosetGroup& b) {
                  if (a.coset.dim() != b.coset.dim()) return a.coset.dim() > b.coset.dim();
                  return a.coset.key() < b.coset.key();
              });
    return dec;
}

ResidueDatum equivariance_transport(const ResidueDatum& datum, const WeylElement& w,
                                    const RootSystem& rs) {
    ResidueDatum out;
    out.target = datum.target.apply(w.mat);
    QMat winv_q = invert(QMat::from_int(w.mat));
    IMat winv(w.mat.rows, w.mat.cols);
    for (long i = 0; i < winv.rows; ++i)
        for (long j = 0; j < winv.cols; ++j) {
            if (!winv_q(i, j).is_integer())
                throw std::logic_error("Weyl inverse not integral");
            winv(i, j) = winv_q(i, j).num();
        }
    IMat winv_t = winv.transposed();
    long n = rs.rank();
    for (const auto& [coef, chain] : datum.chains) {
        ResidueChain tchain;
        Rational c = coef;
        Coset parent = Coset::full_torus(n);
        Coset tparent = parent;
        for (const auto& step : chain.steps) {
            Coset tsub = step.sub.apply(w.mat);
            auto canon_functional = [&](const Coset& sub, const Coset& par) -> IVec {
                for (long i = 0; i < sub.defining.rows; ++i) {
                    IVec row = sub.defining.row(i);
                    IVec rb = vec_mat(row, par.dir);
                    if (std::any_of(rb.begin(), rb.end(),
                                    [](const BigInt& x) { return x != 0; }))
                        return row;
                }
                throw std::logic_error("transport: no transversal functional");
            };
            IVec k_orig = canon_functional(step.sub, parent);
            IVec k_push = mat_vec(winv_t, k_orig); // k o w^{-1}
            IVec k_img = canon_functional(tsub, tparent);
            int sign = 0;
            for (long col = 0; col < tparent.dir.cols && sign == 0; ++col) {
                IVec dv = tparent.dir.col(col);
                BigInt aa = dot(dv, k_push);
                BigInt bb = dot(dv, k_img);
                if (aa != 0 && bb != 0) sign = ((aa > 0) == (bb > 0)) ? +1 : -1;
            }
            if (sign == 0) throw std::logic_error("transport: undetermined orientation");
            c *= Rational(sign);
            tchain.steps.push_back({tsub});
            parent = step.sub;
            tparent = tsub;
        }
        out.chains.push_back({c, std::move(tchain)});
    }
    return out;
}

namespace {

// Elements of W acting trivially on the coset direction: the Weyl group of
// the Levi attached to the coset.
std::vector<size_t> levi_weyl_elements(const Coset& a, const RootSystem& rs) {
    std::vector<size_t> idx;
    const auto& wg = rs.weyl_group();
    for (size_t i = 0; i < wg.size(); ++i) {
        IMat wd = wg[i].mat * a.dir;
        if (wd == a.dir) idx.push_back(i);
    }
    return idx;
}

} // namespace

GroupedDecomposition group_decomposition(const Decomposition& dec, const RootSystem& rs) {
    GroupedDecomposition out;
    const auto& wg = rs.weyl_group();
    std::set<std::string> used;
    for (const auto& g : dec.groups) {
        if (used.count(g.coset.key())) continue;
        // full W-orbit of the coset
        std::map<std::string, Coset> orbit;
        for (const auto& w : wg) {
            Coset img = g.coset.apply(w.mat);
            orbit.emplace(img.key(), std::move(img));
        }
        for (const auto& [k, img] : orbit) used.insert(k);
        // representative: standard Levi (direction a joint kernel of simple
        // coroots), then lexicographically minimal (exponents, phases)
        const Coset* rep = nullptr;
        std::vector<int> rep_omega;
        auto omega_of = [&](const Coset& img) -> std::optional<std::vector<int>> {
            std::vector<int> omega;
            for (int s = 0; s < rs.rank(); ++s) {
                bool vanish = true;
                for (long col = 0; col < img.dir.cols; ++col)
                    if (img.dir(s, col) != 0) vanish = false;
                if (vanish) omega.push_back(s);
            }
            if (static_cast<long>(omega.size()) == img.codim()) return omega;
            return std::nullopt;
        };
        auto lex_less = [](const Coset& a, const Coset& b) {
            auto tup = [](const Coset& c) {
                return std::make_pair(c.base.expo, c.base.phase);
            };
            auto ta = tup(a), tb = tup(b);
            if (ta != tb) return ta < tb;
            return a.key() < b.key();
        };
        for (const auto& [k, img] : orbit) {
            auto omega = omega_of(img);
            if (!omega) continue;
            if (!rep || lex_less(img, *rep)) {
                rep = &img;
                rep_omega = *omega;
            }
        }
        if (!rep) throw std::logic_error("group_decomposition: no standard representative");
        GroupedRow row;
        row.representative = *rep;
        row.omega = rep_omega;
        // |Stab(A)| inside the Weyl group of the Levi M_A
        auto levi_w = levi_weyl_elements(*rep, rs);
        long stab = 0;
        std::string rep_key = rep->key();
        for (size_t wi : levi_w)
            if (rep->apply(wg[wi].mat).key() == rep_key) ++stab;
        row.stab_order = stab;
        long nchambers = static_cast<long>(g.chamber_set.chambers.size());
        row.weight = Rational(1, nchambers) * Rational(1, stab);
        LeviSubset levi = rs.levi(row.omega);
        row.wplus = rs.minimal_coset_reps(levi);
        for (size_t wi : levi_w) row.orbit_elements.push_back(wi);
        out.rows.push_back(std::move(row));
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const GroupedRow& a, const GroupedRow& b) {
        if (a.representative.dim() != b.representative.dim())
            return a.representative.dim() > b.representative.dim();
        return a.representative.key() < b.representative.key();
    });
    return out;
}

} // namespace rescalc
