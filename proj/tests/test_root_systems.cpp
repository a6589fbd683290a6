#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rescalc/root_system.hpp"

#include <algorithm>
#include <set>

using namespace rescalc;

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(x);
    return v;
}

const Root* root_by_simple(const RootSystem& rs, std::initializer_list<long> coords) {
    IVec want = iv(coords);
    for (const auto& r : rs.positive_roots())
        if (r.simple_coords == want) return &r;
    return nullptr;
}

} // namespace

TEST_CASE("G2 root data") {
    RootSystem g2 = RootSystem::build("G2", 2);
    CHECK(g2.positive_roots().size() == 6);
    // coroot table: alpha -> z_a, beta -> z_b, 3a+b -> z_a+z_b,
    // 3a+2b -> z_a+2z_b, a+b -> z_a+3z_b, 2a+b -> 2z_a+3z_b
    struct Row {
        std::initializer_list<long> simple;
        std::initializer_list<long> coroot;
    };
    const Row table[] = {
        {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{3, 1}, {1, 1}},
        {{3, 2}, {1, 2}}, {{1, 1}, {1, 3}}, {{2, 1}, {2, 3}},
    };
    for (const auto& row : table) {
        const Root* r = root_by_simple(g2, row.simple);
        REQUIRE(r != nullptr);
        CHECK(r->coroot == iv(row.coroot));
    }
    // alpha short, beta long
    CHECK_FALSE(root_by_simple(g2, {1, 0})->is_long);
    CHECK(root_by_simple(g2, {0, 1})->is_long);
    // z-coordinates of the simple roots
    CHECK(root_by_simple(g2, {1, 0})->weight_coords == iv({2, -1}));
    CHECK(root_by_simple(g2, {0, 1})->weight_coords == iv({-3, 2}));
}

TEST_CASE("G2 Weyl group is dihedral of order 12") {
    RootSystem g2 = RootSystem::build("G2", 2);
    const auto& w = g2.weyl_group();
    CHECK(w.size() == 12);
    CHECK(w[0].mat == IMat::identity(2));
    // s_alpha(beta) = 3 alpha + beta and s_beta(alpha) = alpha + beta
    const Root* alpha = root_by_simple(g2, {1, 0});
    const Root* beta = root_by_simple(g2, {0, 1});
    IMat s_a = IMat::identity(2), s_b = IMat::identity(2);
    for (int i = 0; i < 2; ++i) {
        s_a(i, 0) -= g2.cartan()(i, 0);
        s_b(i, 1) -= g2.cartan()(i, 1);
    }
    CHECK(mat_vec(s_a, beta->weight_coords) ==
          root_by_simple(g2, {3, 1})->weight_coords);
    CHECK(mat_vec(s_b, alpha->weight_coords) ==
          root_by_simple(g2, {1, 1})->weight_coords);
}

TEST_CASE("A1 basics") {
    RootSystem a1 = RootSystem::build("A", 1);
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.weyl_group().size() == 2);
    const Root& r = a1.positive_roots()[0];
    CHECK(dot(r.weight_coords, r.coroot) == 2);
}

TEST_CASE("B2 has four positive roots") {
    RootSystem b2 = RootSystem::build("B", 2);
    CHECK(b2.positive_roots().size() == 4);
    CHECK(b2.weyl_group().size() == 8);
}

TEST_CASE("other types and rejects") {
    CHECK(RootSystem::build("A", 2).positive_roots().size() == 3);
    CHECK(RootSystem::build("A", 3).positive_roots().size() == 6);
    CHECK(RootSystem::build("A", 3).weyl_group().size() == 24);
    CHECK(RootSystem::build("D", 4).positive_roots().size() == 12);
    CHECK(RootSystem::build("C", 3).positive_roots().size() == 9);
    CHECK_THROWS(RootSystem::build("E", 8));
    CHECK_THROWS(RootSystem::build("G2", 3));
    CHECK_THROWS(RootSystem::build("A", 7));
}

TEST_CASE("coroot map is Weyl equivariant and the Gram matrix invariant") {
    for (const char* spec : {"A2", "B2", "G2"}) {
        std::string s(spec);
        RootSystem rs = s == "G2" ? RootSystem::build("G2", 2)
                                  : RootSystem::build(s.substr(0, 1), s[1] - '0');
        const auto& roots = rs.positive_roots();
        for (const auto& w : rs.weyl_group()) {
            QMat wq = QMat::from_int(w.mat);
            QMat g = wq.transposed() * rs.gram() * wq;
            for (long i = 0; i < g.rows; ++i)
                for (long j = 0; j < g.cols; ++j) CHECK(g(i, j) == rs.gram()(i, j));
            for (const auto& r : roots) {
                IVec img = mat_vec(w.mat, r.weight_coords);
                auto [idx, sign] = rs.find_root(img);
                REQUIRE(idx >= 0);
                // <w lambda, (w gamma)vee> = <lambda, gammavee> on basis vectors
                for (int b = 0; b < rs.rank(); ++b) {
                    IVec e(rs.rank(), BigInt(0));
                    e[b] = 1;
                    IVec we = mat_vec(w.mat, e);
                    BigInt lhs = dot(we, roots[idx].coroot);
                    if (sign < 0) lhs = -lhs;
                    CHECK(lhs == dot(e, r.coroot));
                }
            }
        }
    }
}

TEST_CASE("length equals the inversion count") {
    RootSystem g2 = RootSystem::build("G2", 2);
    for (const auto& w : g2.weyl_group()) {
        long inversions = 0;
        for (const auto& r : g2.positive_roots()) {
            IVec img = mat_vec(w.mat, r.weight_coords);
            auto [idx, sign] = g2.find_root(img);
            REQUIRE(idx >= 0);
            if (sign < 0) ++inversions;
        }
        CHECK(w.length == inversions);
    }
}

TEST_CASE("minimal coset representatives") {
    RootSystem g2 = RootSystem::build("G2", 2);
    LeviSubset full = g2.levi({0, 1});
    auto reps_full = g2.minimal_coset_reps(full);
    CHECK(reps_full.size() == 1);
    CHECK(g2.weyl_group()[reps_full[0]].length == 0);
    LeviSubset none = g2.levi({});
    CHECK(g2.minimal_coset_reps(none).size() == 12);
    LeviSubset alpha = g2.levi({0});
    auto reps = g2.minimal_coset_reps(alpha);
    CHECK(reps.size() == 6);
    for (size_t i : reps) {
        for (int k : alpha.omega) {
            IVec img = mat_vec(g2.weyl_group()[i].mat,
                               g2.positive_roots()[k].weight_coords);
            auto [idx, sign] = g2.find_root(img);
            REQUIRE(idx >= 0);
            CHECK(sign > 0);
        }
    }
}

TEST_CASE("orbit counting agrees with direct enumeration") {
    RootSystem g2 = RootSystem::build("G2", 2);
    LeviSubset alpha = g2.levi({0});
    long direct = g2.count_conjugate_standard_levis(alpha);
    long predicted = g2.orbit_count_check(alpha, 2);
    CHECK(direct == predicted);
    CHECK(predicted == 1);
    LeviSubset full = g2.levi({0, 1});
    CHECK(g2.orbit_count_check(full, 1) == 1);
    CHECK(g2.count_conjugate_standard_levis(full) == 1);
    LeviSubset none = g2.levi({});
    CHECK(g2.orbit_count_check(none, 12) == 1);
    RootSystem a2 = RootSystem::build("A", 2);
    LeviSubset l0 = a2.levi({0});
    CHECK(a2.count_conjugate_standard_levis(l0) == 2);
    CHECK(a2.orbit_count_check(l0, 2) == 2);
}
