#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rescalc/mu.hpp"
#include "rescalc/torus.hpp"

#include <set>

using namespace rescalc;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(x);
    return v;
}

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }

} // namespace

TEST_CASE("component split: square roots of unity on a 1-torus") {
    // { x^2 = 1 } -> two components with phases 0 and 1/2
    auto comps = component_split(1, {{iv({2}), {Rational(0), Rational(0)}}});
    REQUIRE(comps.size() == 2);
    std::set<std::string> phases;
    for (const auto& c : comps) {
        CHECK(c.dim() == 0);
        CHECK(c.base.expo[0] == Rational(0));
        phases.insert(c.base.phase[0].str());
    }
    CHECK(phases == std::set<std::string>{"0", "1/2"});
}

TEST_CASE("component split: empty system is the full torus") {
    auto comps = component_split(2, {});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dim() == 2);
    CHECK(comps[0].codim() == 0);
}

TEST_CASE("component split: G2 intersection point") {
    // { x^{alphavee} = q } cap { x^{betavee} = q } -> exponents (1,1), phases (0,0)
    auto comps = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}},
                                     {iv({0, 1}), {Rational(0), Rational(1)}}});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dim() == 0);
    CHECK(comps[0].base.expo == qv({Rational(1), Rational(1)}));
    CHECK(comps[0].base.phase == qv({Rational(0), Rational(0)}));
}

TEST_CASE("component split: inconsistent system is empty") {
    // x = q and x = q^2 cannot hold together
    auto comps = component_split(1, {{iv({1}), {Rational(0), Rational(1)}},
                                     {iv({1}), {Rational(0), Rational(2)}}});
    CHECK(comps.empty());
}

TEST_CASE("component split: cube roots along a line") {
    // G2: x^{alphavee} = q and x^{(alpha+beta)vee} = q force x_beta^3 = 1
    auto comps = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}},
                                     {iv({1, 3}), {Rational(0), Rational(1)}}});
    REQUIRE(comps.size() == 3);
    std::set<std::string> phases;
    for (const auto& c : comps) {
        CHECK(c.base.expo == qv({Rational(1), Rational(0)}));
        phases.insert(c.base.phase[1].str());
    }
    CHECK(phases == std::set<std::string>{"0", "1/3", "2/3"});
}

TEST_CASE("components partition the solution set on sample points") {
    // sample points of { x^{(1,2)} = q } must land in exactly one component of
    // the refined system with { x^{(2,1)} = q^2 } added when they satisfy it
    auto whole = component_split(2, {{iv({1, 2}), {Rational(0), Rational(1)}}});
    REQUIRE(whole.size() == 1);
    auto refined = component_split(2, {{iv({1, 2}), {Rational(0), Rational(1)}},
                                       {iv({2, 1}), {Rational(0), Rational(2)}}});
    CHECK(refined.size() == 3); // content of the quotient form is 3
    for (long t = -2; t <= 2; ++t) {
        // walk along the direction of the big component
        TorusPoint y({Rational(t, 7)}, {Rational(t)});
        TorusPoint p = whole[0].global_point(y);
        auto [ph, ex] = p.monomial(iv({2, 1}));
        int hits = 0;
        for (const auto& c : refined)
            if (c.contains(p)) ++hits;
        bool on_refined = (ph.is_zero() && ex == Rational(2));
        CHECK(hits == (on_refined ? 1 : 0));
    }
}

TEST_CASE("origin of the G2 alpha hyperplane is alpha/2") {
    RootSystem g2 = RootSystem::build("G2", 2);
    auto comps = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}}});
    REQUIRE(comps.size() == 1);
    QVec r = origin_real_part(comps[0], g2.gram());
    // alpha/2 = omega_alpha - omega_beta/2 has z-coordinates (1, -1/2)
    CHECK(r == qv({Rational(1), Rational(-1, 2)}));
    // the full torus has origin 0
    Coset top = Coset::full_torus(2);
    CHECK(origin_real_part(top, g2.gram()) == qv({Rational(0), Rational(0)}));
    // a point coset is its own real part
    CHECK(origin_real_part(component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}},
                                               {iv({0, 1}), {Rational(0), Rational(3)}}})[0],
                           g2.gram()) == qv({Rational(1), Rational(3)}));
}

TEST_CASE("origin is Weyl equivariant") {
    RootSystem g2 = RootSystem::build("G2", 2);
    auto comps = component_split(2, {{iv({1, 1}), {Rational(1, 2), Rational(1)}}});
    REQUIRE(comps.size() == 1);
    for (const auto& w : g2.weyl_group()) {
        Coset img = comps[0].apply(w.mat);
        QVec lhs = origin_real_part(img, g2.gram());
        QVec rhs = mat_vec_q(w.mat, origin_real_part(comps[0], g2.gram()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("regular test") {
    RootSystem g2 = RootSystem::build("G2", 2);
    Factored mu = build_mu(g2, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, g2);
    Coset top = Coset::full_torus(2);
    // the point with exponents (1,1) lies on singular components
    TorusPoint p({Rational(0), Rational(0)}, {Rational(1), Rational(1)});
    CHECK_FALSE(regular_test(p, top, arr));
    // a generic point is regular
    TorusPoint generic({Rational(1, 7), Rational(2, 11)}, {Rational(1, 3), Rational(1, 5)});
    CHECK(regular_test(generic, top, arr));
    // the base point of a component is regular inside that component when no
    // other component passes through it
    auto sq = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}}});
    TorusPoint onit = sq[0].global_point(TorusPoint({Rational(1, 7)}, {Rational(9)}));
    CHECK(regular_test(onit, sq[0], arr));
    CHECK_THROWS(regular_test(generic, sq[0], arr));
}

TEST_CASE("Weyl action permutes the mu arrangement") {
    RootSystem g2 = RootSystem::build("G2", 2);
    Factored mu = build_mu(g2, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, g2);
    for (const auto& w : g2.weyl_group()) {
        for (const auto& h : arr.components) {
            // image component: transform a defining amount of data
            std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq{
                {h.form, {h.cphase, h.cexpo}}};
            auto comp = component_split(2, eq);
            REQUIRE(comp.size() == 1);
            Coset img = comp[0].apply(w.mat);
            // the image must be one of the arrangement components
            bool found = false;
            for (const auto& h2 : arr.components) {
                std::vector<std::pair<IVec, std::pair<Rational, Rational>>> eq2{
                    {h2.form, {h2.cphase, h2.cexpo}}};
                auto comp2 = component_split(2, eq2);
                if (comp2.size() == 1 && comp2[0].same_coset(img)) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("chamber counts equal the Weyl order for equal parameters") {
    struct Case {
        const char* type;
        int rank;
        long expect;
    };
    for (const Case& c : {Case{"A", 1, 2}, Case{"A", 2, 6}, Case{"B", 2, 8},
                          Case{"G2", 2, 12}, Case{"A", 3, 24}}) {
        RootSystem rs = RootSystem::build(c.type, c.rank);
        Factored mu = build_mu(rs, MuParameters::equal(Rational(1)));
        Arrangement arr = arrangement_from_mu(mu, rs);
        Coset top = Coset::full_torus(rs.rank());
        ChamberSet cs = chambers(top, arr, &rs);
        CHECK(static_cast<long>(cs.chambers.size()) == c.expect);
        CHECK(cs.chambers.size() == static_cast<size_t>(rs.weyl_order()));
        // sign vectors are pairwise distinct and witness signs are nonzero
        std::set<std::vector<int>> signs;
        for (const auto& ch : cs.chambers) {
            for (int s : ch.signs) CHECK(s != 0);
            signs.insert(ch.signs);
        }
        CHECK(signs.size() == cs.chambers.size());
    }
}

TEST_CASE("chambers of lines and points") {
    RootSystem g2 = RootSystem::build("G2", 2);
    Factored mu = build_mu(g2, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, g2);
    auto line = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}}});
    ChamberSet cs = chambers(line[0], arr, &g2);
    CHECK(cs.chambers.size() == 2);
    auto pt = component_split(2, {{iv({1, 0}), {Rational(0), Rational(1)}},
                                  {iv({0, 1}), {Rational(0), Rational(1)}}});
    ChamberSet cp = chambers(pt[0], arr, &g2);
    CHECK(cp.chambers.size() == 1);
    CHECK(cp.chambers[0].witness.empty());
}

TEST_CASE("torus point json round trip data") {
    TorusPoint p({Rational(1, 3), Rational(0)}, {Rational(-5, 2), Rational(7)});
    CHECK(p.monomial(iv({3, 1})).first == Rational(0));
    CHECK(p.monomial(iv({3, 1})).second == Rational(-1, 2));
    // local coordinates invert global_point on a line
    auto line = component_split(2, {{iv({1, 2}), {Rational(1, 2), Rational(1)}}});
    REQUIRE(line.size() == 1);
    TorusPoint y({Rational(3, 5)}, {Rational(2)});
    TorusPoint g = line[0].global_point(y);
    TorusPoint back = line[0].local_coords(g);
    CHECK(back == y);
}
