#include "rescalc/json_io.hpp"

#include <sstream>

namespace rescalc {

std::string rational_str(const Rational& r) { return r.str(); }
Rational rational_from_str(const std::string& s) { return Rational::parse(s); }

Json to_json(const TorusPoint& p) {
    Json j;
    Json phases = Json::array(), expos = Json::array();
    for (const auto& x : p.phase) phases.push_back(x.str());
    for (const auto& x : p.expo) expos.push_back(x.str());
    j["phases"] = phases;
    j["exponents"] = expos;
    return j;
}

TorusPoint torus_point_from_json(const Json& j) {
    QVec ph, ex;
    for (const auto& s : j.at("phases")) ph.push_back(Rational::parse(s.get<std::string>()));
    for (const auto& s : j.at("exponents")) ex.push_back(Rational::parse(s.get<std::string>()));
    return TorusPoint(std::move(ph), std::move(ex));
}

Json to_json(const Coset& c) {
    Json j;
    j["base"] = to_json(c.base);
    Json dir = Json::array();
    for (long i = 0; i < c.dir.rows; ++i) {
        Json row = Json::array();
        for (long k = 0; k < c.dir.cols; ++k) row.push_back(c.dir(i, k).convert_to<long>());
        dir.push_back(row);
    }
    j["direction"] = dir;
    j["dim"] = c.dim();
    return j;
}

Json to_json(const Hypersurface& h) {
    Json j;
    Json form = Json::array();
    for (const auto& x : h.form) form.push_back(x.convert_to<long>());
    j["form"] = form;
    j["phase"] = h.cphase.str();
    j["exponent"] = h.cexpo.str();
    if (h.orient_root >= 0) j["root"] = h.orient_root;
    return j;
}

Json to_json(const Factored& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms) {
        Json jt;
        jt["scalar"] = t.scalar.str();
        Json mono = Json::array();
        for (const auto& x : t.mono) mono.push_back(x.convert_to<long>());
        jt["monomial"] = mono;
        Json facs = Json::array();
        for (const auto& fac : t.factors) {
            Json jf;
            Json m = Json::array();
            for (const auto& x : fac.m) m.push_back(x.convert_to<long>());
            jf["monomial"] = m;
            jf["phase"] = fac.cphase.str();
            jf["exponent"] = fac.cexpo.str();
            jf["multiplicity"] = fac.mult;
            facs.push_back(jf);
        }
        jt["factors"] = facs;
        terms.push_back(jt);
    }
    Json j;
    j["nvars"] = f.nvars;
    j["terms"] = terms;
    return j;
}

Json to_json(const MuParameters& p, bool two_lengths) {
    Json j;
    auto orbit = [](const MuParameters::OrbitParams& o) {
        Json jo;
        jo["k"] = o.k.str();
        if (o.l) jo["l"] = o.l->str();
        if (!(o.scale == Rational(1))) jo["scale"] = o.scale.str();
        if (!(o.c == Rational(1))) jo["c"] = o.c.str();
        return jo;
    };
    if (two_lengths) {
        j["short"] = orbit(p.short_roots);
        j["long"] = orbit(p.long_roots);
    } else {
        j["short"] = orbit(p.short_roots);
    }
    return j;
}

MuParameters mu_parameters_from_json(const Json& j) {
    MuParameters p;
    auto orbit = [](const Json& jo) {
        MuParameters::OrbitParams o;
        if (jo.contains("k")) o.k = Rational::parse(jo.at("k").get<std::string>());
        if (jo.contains("l")) o.l = Rational::parse(jo.at("l").get<std::string>());
        if (jo.contains("scale")) o.scale = Rational::parse(jo.at("scale").get<std::string>());
        if (jo.contains("c")) o.c = Rational::parse(jo.at("c").get<std::string>());
        return o;
    };
    if (j.contains("short")) p.short_roots = orbit(j.at("short"));
    p.long_roots = j.contains("long") ? orbit(j.at("long")) : p.short_roots;
    return p;
}

Json root_system_summary(const RootSystem& rs) {
    Json j;
    j["type"] = rs.type();
    j["rank"] = rs.rank();
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots()) {
        Json jr;
        Json simple = Json::array(), weight = Json::array(), coroot = Json::array();
        for (const auto& x : r.simple_coords) simple.push_back(x.convert_to<long>());
        for (const auto& x : r.weight_coords) weight.push_back(x.convert_to<long>());
        for (const auto& x : r.coroot) coroot.push_back(x.convert_to<long>());
        jr["simple_coords"] = simple;
        jr["weight_coords"] = weight;
        jr["coroot"] = coroot;
        jr["long"] = r.is_long;
        roots.push_back(jr);
    }
    j["positive_roots"] = roots;
    j["weyl_order"] = rs.weyl_order();
    Json gram = Json::array();
    for (long i = 0; i < rs.gram().rows; ++i) {
        Json row = Json::array();
        for (long k = 0; k < rs.gram().cols; ++k) row.push_back(rs.gram()(i, k).str());
        gram.push_back(row);
    }
    j["gram"] = gram;
    return j;
}

Json to_json(const ResidualReport& r, double q) {
    Json j;
    j["coset"] = to_json(r.coset);
    j["codim"] = r.codim;
    j["pole_order"] = r.pole_order;
    j["residual"] = r.residual;
    j["orbit"] = r.orbit_id;
    j["orbit_representative"] = r.orbit_representative;
    if (!r.opdam.is_zero() || (r.residual && r.codim == r.coset.ambient_rank())) {
        j["opdam_sum"] = r.opdam.str();
        auto v = r.opdam.to_complex(q);
        j["opdam_numeric"] = {v.real(), v.imag()};
    }
    return j;
}

Json residual_report_json(const std::vector<ResidualReport>& reports, double q) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, q));
    return arr;
}

Json decomposition_json(const Decomposition& dec, const Factored& f, const RootSystem& rs,
                        const NumericConfig& cfg) {
    Json j;
    Json start = Json::array();
    for (const auto& x : dec.start) start.push_back(x.str());
    j["start"] = start;
    Json terms = Json::array();
    for (const auto& g : dec.groups) {
        for (const auto& ct : g.chains) {
            Json jt;
            jt["coset"] = to_json(g.coset);
            Json origin = Json::array();
            for (const auto& x : g.origin) origin.push_back(x.str());
            jt["origin"] = origin;
            jt["weight"] = ct.total.str();
            Json chain = Json::array();
            for (const auto& s : ct.chain.steps) chain.push_back(to_json(s.sub));
            jt["chain"] = chain;
            jt["depth"] = ct.chain.steps.size();
            if (g.coset.dim() == 0) {
                FramedFunction r = iterated_residue(f, ct.chain, rs);
                Field v = r.fn.is_zero() ? Field::zero()
                                         : r.fn.evaluate(TorusPoint({}, {}));
                v = v.with_logq(v.logq_power() + static_cast<long>(ct.chain.steps.size()));
                Field scaled = Field(ct.total) * v;
                jt["exact_value"] = scaled.str();
                auto num = scaled.to_complex(cfg.q);
                jt["numeric_value"] = {num.real(), num.imag()};
            }
            terms.push_back(jt);
        }
    }
    j["terms"] = terms;
    return j;
}

Json grouped_json(const GroupedDecomposition& gd, const RootSystem& rs) {
    (void)rs;
    Json rows = Json::array();
    for (const auto& row : gd.rows) {
        Json jr;
        Json omega = Json::array();
        for (int s : row.omega) omega.push_back(s);
        jr["omega"] = omega;
        jr["representative"] = to_json(row.representative);
        jr["stabilizer"] = row.stab_order;
        jr["weight"] = row.weight.str();
        jr["wplus_count"] = row.wplus.size();
        rows.push_back(jr);
    }
    Json j;
    j["rows"] = rows;
    return j;
}

Json check_report_json(const CheckReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["difference"] = rep.lhs_minus_rhs;
    j["scale"] = rep.scale;
    if (!rep.message.empty()) j["message"] = rep.message;
    Json contribs = Json::array();
    for (const auto& [name, v] : rep.contributions) {
        Json c;
        c["term"] = name;
        c["value"] = {v.real(), v.imag()};
        contribs.push_back(c);
    }
    j["contributions"] = contribs;
    return j;
}

} // namespace rescalc
