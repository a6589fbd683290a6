#include "rescalc/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rescalc {

std::vector<Coset> enumerate_cosets(const Arrangement& arr, long rank, long cap) {
    std::map<std::string, Coset> seen;
    Coset top = Coset::full_torus(rank);
    std::vector<Coset> queue{top};
    seen.emplace(top.key(), top);
    for (size_t h = 0; h < queue.size(); ++h) {
        Coset cur = queue[h];
        for (const auto& comp : arr.components) {
            // intersect cur with the component
            std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eqs;
            for (long i = 0; i < cur.defining.rows; ++i)
                eqs.push_back({cur.defining.row(i), cur.defvals[i]});
            eqs.push_back({comp.form, {comp.cphase, comp.cexpo}});
            for (auto& sub : component_split(rank, eqs)) {
                if (sub.dim() == cur.dim()) continue; // component contained cur
                std::string k = sub.key();
                if (seen.count(k)) continue;
                seen.emplace(k, sub);
                queue.push_back(std::move(sub));
                if (static_cast<long>(seen.size()) > cap)
                    throw std::domain_error("enumerate_cosets: combinatorial cap exceeded");
            }
        }
    }
    std::vector<Coset> out;
    for (auto& [k, c] : seen) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Coset& a, const Coset& b) {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a.key() < b.key();
    });
    return out;
}

std::vector<ResidualReport> classify_residual(const Factored& mu, const Arrangement& arr,
                                              const RootSystem& rs) {
    std::vector<Coset> cosets = enumerate_cosets(arr, rs.rank());
    std::vector<ResidualReport> reports;
    reports.reserve(cosets.size());
    for (auto& c : cosets) {
        ResidualReport r;
        r.codim = c.codim();
        r.pole_order = mu.order_along_coset_max(c);
        r.residual = (r.pole_order == r.codim);
        if (r.pole_order > r.codim)
            throw std::logic_error("classify_residual: pole order exceeds the codimension");
        r.coset = std::move(c);
        reports.push_back(std::move(r));
    }
    // Weyl orbits with lexicographically minimal representatives
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < reports.size(); ++i) index[reports[i].coset.key()] = i;
    int next_orbit = 0;
    auto& wg = rs.weyl_group();
    for (size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].orbit_id >= 0) continue;
        std::vector<size_t> members;
        std::set<std::string> keys;
        for (const auto& w : wg) {
            Coset img = reports[i].coset.apply(w.mat);
            std::string k = img.key();
            if (!keys.insert(k).second) continue;
            auto it = index.find(k);
            if (it != index.end()) members.push_back(it->second);
        }
        // representative: minimal (exponents, phases) of the base point
        size_t rep = members.front();
        auto tup = [&](size_t j) {
            return std::make_pair(reports[j].coset.base.expo, reports[j].coset.base.phase);
        };
        for (size_t j : members)
            if (tup(j) < tup(rep)) rep = j;
        for (size_t j : members) {
            reports[j].orbit_id = next_orbit;
            if (reports[j].residual != reports[rep].residual)
                throw std::logic_error("classify_residual: residual flag not orbit constant");
        }
        reports[rep].orbit_representative = true;
        ++next_orbit;
    }
    return reports;
}

Field opdam_sum(const Coset& a, const Factored& mu, const Decomposition& data,
                const RootSystem& rs) {
    if (a.dim() != 0)
        throw std::invalid_argument("opdam_sum: coset must be a point");
    Field total = Field::zero();
    for (const auto& w : rs.weyl_group()) {
        Coset wa = a.apply(w.mat);
        ResidueDatum d = data.datum_at(wa);
        if (d.empty()) continue;
        TorusPoint sigma = wa.base;
        total += apply_datum(d, mu, sigma, rs);
    }
    return total;
}

std::vector<Coset> brute_force_residual_search(const Factored& mu, const Arrangement& arr,
                                               const RootSystem& rs) {
    long n = rs.rank();
    if (n > 2)
        throw std::domain_error("brute_force_residual_search: rank cap is 2");
    // monomial test set {-2..2}^rank
    std::vector<IVec> monomials;
    {
        IVec m(n, BigInt(0));
        std::vector<long> idx(n, -2);
        for (;;) {
            for (long i = 0; i < n; ++i) m[i] = idx[i];
            monomials.push_back(m);
            long pos = n - 1;
            while (pos >= 0 && ++idx[pos] > 2) idx[pos--] = -2;
            if (pos < 0) break;
        }
    }
    std::map<std::string, Coset> found;
    Coset top = Coset::full_torus(n);
    // chains: single components, then their point sub-cosets
    for (const auto& h : arr.components) {
        std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq{
            {h.form, {h.cphase, h.cexpo}}};
        for (auto& s1 : component_split(n, eq)) {
            ResidueChain chain1;
            chain1.steps.push_back({s1});
            if (n == 1) {
                for (const auto& m : monomials) {
                    Factored f = Factored::monomial(n, m, Field::one()) * mu;
                    FramedFunction r = iterated_residue(f, chain1, rs);
                    if (!r.fn.is_zero() && !r.fn.evaluate(TorusPoint({}, {})).is_zero()) {
                        found.emplace(s1.key(), s1);
                        break;
                    }
                }
                continue;
            }
            // second level: points of T cap s1 over all components T
            std::map<std::string, Coset> subs;
            for (const auto& t : arr.components) {
                std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq2 = eq;
                eq2.push_back({t.form, {t.cphase, t.cexpo}});
                for (auto& s2 : component_split(n, eq2))
                    if (s2.dim() == 0) subs.emplace(s2.key(), s2);
            }
            for (auto& [k, s2] : subs) {
                if (found.count(k)) continue;
                ResidueChain chain2 = chain1;
                chain2.steps.push_back({s2});
                for (const auto& m : monomials) {
                    Factored f = Factored::monomial(n, m, Field::one()) * mu;
                    FramedFunction r = iterated_residue(f, chain2, rs);
                    if (r.fn.is_zero()) continue;
                    Field v = r.fn.evaluate(TorusPoint({}, {}));
                    if (!v.is_zero()) {
                        found.emplace(k, s2);
                        break;
                    }
                }
            }
        }
    }
    std::vector<Coset> out;
    for (auto& [k, c] : found)
        if (c.dim() == 0) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(),
              [](const Coset& a, const Coset& b) { return a.key() < b.key(); });
    return out;
}

} // namespace rescalc
