#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rescalc/numeric.hpp"

#include <random>

using namespace rescalc;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(x);
    return v;
}

Factored random_laurent(long nvars, std::mt19937_64& rng, long spread = 2) {
    Factored f(nvars);
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        IVec m(nvars);
        for (long i = 0; i < nvars; ++i)
            m[i] = static_cast<long>(rng() % (2 * spread + 1)) - spread;
        long c = static_cast<long>(rng() % 9) - 4;
        if (c == 0) c = 1;
        f = f + Factored::monomial(nvars, m, Field(Rational(c)));
    }
    if (f.is_zero()) f = Factored::constant(nvars, Field::one());
    return f;
}

} // namespace

TEST_CASE("config validation") {
    NumericConfig cfg;
    cfg.q = 0.5;
    CHECK_THROWS(cfg.validate());
    cfg.q = 2.0;
    cfg.grid = 100;
    CHECK_THROWS(cfg.validate());
    cfg.grid = 128;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("quadrature of the constant function is one") {
    NumericConfig cfg;
    Factored one = Factored::constant(2, Field::one());
    QVec r{Rational(1, 3), Rational(-2, 5)};
    auto v = quadrature_integral(one, r, cfg);
    CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-14);
}

TEST_CASE("geometric series means inside and outside") {
    // f(t) = 1/(1 - t/q): mean 1 inside |t| < q, mean 0 outside, to 1e-10
    NumericConfig cfg;
    Factored f(1);
    FTerm t(1);
    t.factors.push_back({iv({1}), Rational(0), Rational(-1), -1});
    f.terms.push_back(t);
    f.normalize();
    auto inside = quadrature_integral(f, {Rational(0)}, cfg);
    auto outside = quadrature_integral(f, {Rational(2)}, cfg);
    CHECK(std::abs(inside - std::complex<double>(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(outside) < 1e-10);
    // a contour through the pole is rejected exactly
    CHECK_THROWS(quadrature_integral(f, {Rational(1)}, cfg));
}

TEST_CASE("shift invariance off the singular set") {
    NumericConfig cfg;
    RootSystem a2 = RootSystem::build("A", 2);
    Factored mu = build_mu(a2, MuParameters::equal(Rational(1)));
    auto v1 = quadrature_integral(mu, {Rational(1, 3), Rational(1, 5)}, cfg);
    auto v2 = quadrature_integral(mu, {Rational(1, 4), Rational(2, 5)}, cfg);
    CHECK(std::abs(v1 - v2) < 1e-9);
}

TEST_CASE("quadrature error decays with the grid") {
    NumericConfig base;
    RootSystem a1 = RootSystem::build("A", 1);
    Factored mu = build_mu(a1, MuParameters::equal(Rational(1)));
    // contour close to the pole at Re = 1, so the spectral decay is visible
    // above machine precision
    NumericConfig fine = base;
    fine.grid = 1024;
    auto ref = quadrature_integral(mu, {Rational(15, 16)}, fine);
    double last = 1e9;
    for (long g : {64L, 128L, 256L}) {
        NumericConfig cfg = base;
        cfg.grid = g;
        auto v = quadrature_integral(mu, {Rational(15, 16)}, cfg);
        double err = std::abs(v - ref) + 1e-18;
        CHECK(err < last);
        last = err;
    }
}

TEST_CASE("rank-1 crossing identity at x = q") {
    RootSystem a1 = RootSystem::build("A", 1);
    Factored mu = build_mu(a1, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, a1);
    NumericConfig cfg;
    cfg.tolerance = 1e-8;
    CheckReport rep = check_crossing_identity(mu, {Rational(1, 2)}, {Rational(3, 2)},
                                              arr, a1, cfg);
    CHECK(rep.pass);
    // the jump equals the engine residue: I(outside) - I(inside) = +Res
    Decomposition dec = compute_residue_data(mu, arr, a1, {});
    Field res = term_value_exact(dec.groups[1], mu, a1);
    CHECK(std::abs(rep.contributions.at(0).second - res.to_complex(cfg.q)) < 1e-8);
}

TEST_CASE("no crossing means no jump") {
    RootSystem a1 = RootSystem::build("A", 1);
    Factored mu = build_mu(a1, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, a1);
    NumericConfig cfg;
    auto v1 = quadrature_integral(mu, {Rational(3, 2)}, cfg);
    auto v2 = quadrature_integral(mu, {Rational(7, 4)}, cfg);
    CHECK(std::abs(v1 - v2) < 1e-10);
}

TEST_CASE("full decomposition identity for A1 with multipliers") {
    RootSystem a1 = RootSystem::build("A", 1);
    Factored mu = build_mu(a1, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, a1);
    Decomposition dec = compute_residue_data(mu, arr, a1, {});
    NumericConfig cfg;
    cfg.tolerance = 1e-8;
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 5; ++trial) {
        Factored f = random_laurent(1, rng) * mu;
        CheckReport rep = check_full_decomposition(f, dec, a1, cfg);
        CAPTURE(rep.message);
        CHECK(rep.pass);
    }
}

TEST_CASE("full decomposition identity for G2") {
    RootSystem g2 = RootSystem::build("G2", 2);
    Factored mu = build_mu(g2, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, g2);
    Decomposition dec = compute_residue_data(mu, arr, g2, {});
    NumericConfig cfg;
    CheckReport rep = check_full_decomposition(mu, dec, g2, cfg);
    CAPTURE(rep.message);
    CHECK(rep.pass);
}

TEST_CASE("crossing identity for a G2 beta-family wall") {
    RootSystem g2 = RootSystem::build("G2", 2);
    Factored mu = build_mu(g2, MuParameters::equal(Rational(1)));
    Arrangement arr = arrangement_from_mu(mu, g2);
    NumericConfig cfg;
    // cross only the beta wall z_beta = 1 at the A.2 window: keep z_alpha
    // fixed at 2/3 and move z_beta from 5/4 to 3/4
    QVec r2{Rational(2, 3), Rational(5, 4)};
    QVec r1{Rational(2, 3), Rational(3, 4)};
    CheckReport rep = check_crossing_identity(mu, r1, r2, arr, g2, cfg);
    CAPTURE(rep.message);
    CHECK(rep.pass);
}
