#include "rescalc/mu.hpp"

#include <algorithm>

namespace rescalc {

Factored build_mu(const RootSystem& rs, const MuParameters& params) {
    long n = rs.rank();
    FTerm term(n);
    auto add_block = [&](const IVec& mvec, const Rational& k, const Rational& phase) {
        IVec neg = mvec;
        for (auto& x : neg) x = -x;
        term.factors.push_back({mvec, phase, Rational(0), 1});
        term.factors.push_back({neg, phase, Rational(0), 1});
        term.factors.push_back({neg, phase, k, -1});
        term.factors.push_back({mvec, phase, k, -1});
    };
    for (const auto& root : rs.positive_roots()) {
        const auto& p = params.for_root(root);
        if (!(p.k > Rational(0)))
            throw std::invalid_argument("build_mu: parameter k must be positive");
        if (!p.scale.is_integer() || !(p.scale > Rational(0)))
            throw std::invalid_argument("build_mu: scale m_gamma must be a positive integer");
        IVec mvec = root.coroot;
        if (!(p.scale == Rational(1)))
            for (auto& x : mvec) x *= p.scale.num();
        add_block(mvec, p.k, Rational(0));
        if (p.l) {
            if (!(*p.l > Rational(0)))
                throw std::invalid_argument("build_mu: parameter l must be positive");
            add_block(mvec, *p.l, Rational(1, 2));
        }
        if (!(p.c == Rational(1))) term.scalar *= Field(p.c);
    }
    Factored f(n);
    f.terms.push_back(std::move(term));
    f.normalize();
    return f;
}

Factored mu_levi_factor(const Factored& mu, const Coset& a) {
    Factored r(mu.nvars);
    for (const auto& t : mu.terms) {
        FTerm nt(mu.nvars);
        nt.scalar = t.scalar;
        nt.mono = t.mono;
        for (const auto& f : t.factors) {
            IVec fd = vec_mat(f.m, a.dir);
            bool flat =
                std::all_of(fd.begin(), fd.end(), [](const BigInt& x) { return x == 0; });
            if (flat) nt.factors.push_back(f);
        }
        r.terms.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

Arrangement arrangement_from_mu(const Factored& mu, const RootSystem& rs) {
    Arrangement arr;
    arr.im_closed = true;
    auto push = [&](Hypersurface h) {
        // orient by the positive root whose (scaled) coroot is the form
        IVec prim = primitive(h.form);
        for (size_t i = 0; i < rs.positive_roots().size(); ++i)
            if (primitive(rs.positive_roots()[i].coroot) == prim) {
                h.orient_root = static_cast<int>(i);
                break;
            }
        if (arr.find(h) < 0) arr.components.push_back(std::move(h));
    };
    for (const auto& t : mu.terms)
        for (const auto& f : t.factors) {
            if (f.mult == 0) continue;
            // zero set { x^m = 1/c }, split into connected components in case
            // the monomial is imprimitive (scale m_gamma > 1)
            std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq{
                {f.m, {(-f.cphase).mod1(), -f.cexpo}}};
            for (const auto& comp : component_split(mu.nvars, eq)) {
                Hypersurface h;
                h.form = comp.defining.row(0);
                h.cphase = comp.defvals[0].first;
                h.cexpo = comp.defvals[0].second;
                push(h);
                Hypersurface im = h;
                im.cexpo = Rational(0);
                push(im);
            }
        }
    std::sort(arr.components.begin(), arr.components.end(),
              [](const Hypersurface& a, const Hypersurface& b) {
                  return std::tie(a.form, a.cexpo, a.cphase) <
                         std::tie(b.form, b.cexpo, b.cphase);
              });
    return arr;
}

Factored restrict_to_line(const Factored& f, const TorusPoint& base, const IVec& direction) {
    IMat dir(base.rank(), 1);
    for (long i = 0; i < base.rank(); ++i) dir(i, 0) = direction[i];
    return f.restrict(base, dir);
}

} // namespace rescalc
