#include <doctest.h>

#include "support.hpp"

using namespace glarb;
using namespace glarb::test;

TEST_CASE("single vertex and forests have arboricity 1") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    ValueSet a = ValueSet::finite({one});
    LGraph single(1, z, {}, {});
    CHECK(arb_exact(single, a).value == 1);
    CHECK(arb_oracle(single, a) == 1);
    LGraph tree(5, z, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, {one, one, one, one});
    CHECK(arb_exact(tree, a).value == 1);
    CHECK(arb_oracle(tree, a) == 1);
}

TEST_CASE("documented clique instances") {
    Instance k4 = k4_mod3();
    CHECK(arb_exact(k4.graph, k4.a).value == 2);
    CHECK(arb_oracle(k4.graph, k4.a) == 2);

    Instance k5 = k5_z_a3();
    ArbResult r5 = arb_exact(k5.graph, k5.a);
    CHECK(r5.value == 3);
    CHECK(arb_oracle(k5.graph, k5.a) == 3);
    CHECK(r5.lower_exhausted);
    CHECK(verify_cert(k5.graph, k5.a, r5.witness).ok);
}

TEST_CASE("witness always verifies and uses exactly k parts") {
    std::mt19937_64 rng(15);
    GroupPool pool;
    for (const GroupPtr& g : pool.all()) {
        for (int trial = 0; trial < 10; ++trial) {
            LGraph lg = random_lgraph(g, 7, 50, rng);
            ValueSet a = random_value_set(g, rng);
            ArbResult res = arb_exact(lg, a);
            CHECK(res.witness.parts == res.value);
            CHECK(verify_cert(lg, a, res.witness).ok);
        }
    }
}

TEST_CASE("solver equals oracle on random instances") {
    std::mt19937_64 rng(16);
    GroupPool pool;
    for (const GroupPtr& g : pool.all()) {
        for (int trial = 0; trial < 8; ++trial) {
            int n = 4 + static_cast<int>(rng() % 5);
            LGraph lg = random_lgraph(g, n, 35 + static_cast<int>(rng() % 30), rng);
            ValueSet a = random_value_set(g, rng);
            CHECK(arb_exact(lg, a).value == arb_oracle(lg, a));
        }
    }
}

TEST_CASE("monotone under induced subgraphs") {
    std::mt19937_64 rng(17);
    GroupPool pool;
    for (int trial = 0; trial < 10; ++trial) {
        LGraph lg = random_lgraph(pool.z4, 8, 50, rng);
        ValueSet a = random_value_set(pool.z4, rng);
        int whole = arb_exact(lg, a).value;
        std::vector<int> subset;
        for (int v = 0; v < 8; ++v)
            if (rng() % 2) subset.push_back(v);
        if (subset.empty()) subset.push_back(0);
        InducedSubgraph sub = induced_subgraph(lg, subset);
        CHECK(arb_exact(sub.graph, a).value <= whole);
    }
}

TEST_CASE("oracle guard") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    LGraph big(13, z, {}, {});
    ValueSet a = ValueSet::finite({one});
    CHECK_THROWS_AS(arb_oracle(big, a), PreconditionError);
}

TEST_CASE("budget exhaustion is an explicit error") {
    Instance k5 = k5_z_a3();
    CHECK_THROWS_AS(arb_exact(k5.graph, k5.a, ArbBudget{5}), ResourceError);
}

TEST_CASE("component law") {
    // disjoint union of the K4 instance and one edge: max(2, 1) = 2
    GroupPtr z3 = GroupDesc::make(0, {3});
    Elem one(z3, {1});
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            edges.emplace_back(i, j);
            labels.push_back(one);
        }
    edges.emplace_back(4, 5);
    labels.push_back(one);
    LGraph g(6, z3, edges, labels);
    ValueSet a = ValueSet::finite({Elem::zero(z3)});
    CHECK(arb_exact(g, a).value == 2);
    CHECK(check_component_law(g, a));

    Instance k4 = k4_mod3();
    CHECK(check_component_law(k4.graph, k4.a));

    std::mt19937_64 rng(18);
    GroupPool pool;
    for (int trial = 0; trial < 6; ++trial) {
        LGraph lg = random_lgraph(pool.z2z2, 8, 25, rng);
        CHECK(check_component_law(lg, random_value_set(pool.z2z2, rng)));
    }
}

TEST_CASE("deletion law") {
    Instance k4 = k4_mod3();
    for (int v = 0; v < 4; ++v) CHECK(check_deletion_law(k4.graph, k4.a, v));
    Instance k5 = k5_z_a3();
    CHECK(check_deletion_law(k5.graph, k5.a, 0));

    std::mt19937_64 rng(19);
    GroupPool pool;
    for (int trial = 0; trial < 6; ++trial) {
        LGraph lg = random_lgraph(pool.z3, 7, 50, rng);
        ValueSet a = random_value_set(pool.z3, rng);
        for (int v = 0; v < 7; ++v) CHECK(check_deletion_law(lg, a, v));
    }
}

TEST_CASE("disjoint A-cycles") {
    Instance k4 = k4_mod3();
    auto one_cycle = disjoint_a_cycles(k4.graph, k4.a, 1);
    REQUIRE(one_cycle.size() == 1);
    CHECK(one_cycle[0].verts == std::vector<int>{0, 1, 2});
    CHECK(verify_cert(k4.graph, k4.a, one_cycle[0]).ok);

    // the hypothesis gate: two disjoint A-triangles have arboricity 2 < 4,
    // so t = 2 is rejected even though a greedy pick would succeed
    GroupPtr z3 = GroupDesc::make(0, {3});
    Elem one(z3, {1});
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                edges.emplace_back(base + i, base + j);
                labels.push_back(one);
            }
    LGraph two_triangles(6, z3, edges, labels);
    ValueSet a = ValueSet::finite({Elem::zero(z3)});
    CHECK(arb_exact(two_triangles, a).value == 2);
    CHECK_THROWS_AS(disjoint_a_cycles(two_triangles, a, 2), PreconditionError);
    CHECK_THROWS_AS(disjoint_a_cycles(k4.graph, k4.a, 2), PreconditionError);
}

TEST_CASE("disjoint A-cycles on the K9 instance") {
    Instance k9 = k9_z_a3();
    CHECK(arb_exact(k9.graph, k9.a).value == 5);
    auto cycles = disjoint_a_cycles(k9.graph, k9.a, 2);
    REQUIRE(cycles.size() == 2);
    std::set<int> seen;
    for (const auto& c : cycles) {
        CHECK(verify_cert(k9.graph, k9.a, c).ok);
        for (int v : c.verts) CHECK(seen.insert(v).second);
    }
    CHECK(cycles[0].verts == std::vector<int>{0, 1, 2});
    CHECK(cycles[1].verts == std::vector<int>{3, 4, 5});
}
