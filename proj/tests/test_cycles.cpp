#include <doctest.h>

#include "support.hpp"

using namespace glarb;
using namespace glarb::test;

TEST_CASE("tree has no cycles") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    LGraph tree(5, z, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, {one, one, one, one});
    CHECK(enumerate_simple_cycles(tree, 100).empty());
}

TEST_CASE("K4 has 7 cycles, K5 has 37") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    auto k4 = enumerate_simple_cycles(uniform_clique(z, one, 4), 100);
    CHECK(k4.size() == 7);
    int triangles = 0, squares = 0;
    for (const auto& c : k4) (c.length() == 3 ? triangles : squares)++;
    CHECK(triangles == 4);
    CHECK(squares == 3);

    auto k5 = enumerate_simple_cycles(uniform_clique(z, one, 5), 100);
    CHECK(k5.size() == 37);

    CHECK_THROWS_AS(enumerate_simple_cycles(uniform_clique(z, one, 5), 10), CapacityError);
}

TEST_CASE("enumeration order is canonical") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    auto cycles = enumerate_simple_cycles(uniform_clique(z, one, 4), 100);
    // lexicographic by sorted vertex list, 4-cycles between the (0,1,2) and
    // (0,1,3) triangles
    CHECK(cycles[0].verts == std::vector<int>{0, 1, 2});
    CHECK(cycles[1].length() == 4);
    CHECK(cycles[4].verts == std::vector<int>{0, 1, 3});
    for (size_t i = 1; i < cycles.size(); ++i) CHECK(cycle_order(cycles[i - 1], cycles[i]));
}

TEST_CASE("find_a_cycle shortest-first") {
    GroupPtr z3 = GroupDesc::make(0, {3});
    Elem one(z3, {1});
    LGraph tri = uniform_clique(z3, one, 3);
    ValueSet zero_only = ValueSet::finite({Elem::zero(z3)});
    auto hit = find_a_cycle(tri, zero_only, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->verts == std::vector<int>{0, 1, 2});
    CHECK(hit->value.is_zero());

    ValueSet one_only = ValueSet::finite({one});
    CHECK_FALSE(find_a_cycle(tri, one_only, 3).has_value());

    GroupPtr z = GroupDesc::make(1, {});
    LGraph k4 = uniform_clique(z, Elem(z, {1}), 4);
    ValueSet not3 = ValueSet::cofinite(z, {Elem(z, {3})});
    auto four = find_a_cycle(k4, not3, 4);
    REQUIRE(four.has_value());
    CHECK(four->verts.size() == 4);
    CHECK(four->value == Elem(z, {4}));
}

TEST_CASE("cycles through a fixed vertex") {
    Instance inst = k4_mod3();
    std::vector<char> members(4, true);
    CHECK(has_a_cycle_through(inst.graph, members, 0, inst.a));
    members = {true, true, false, false};
    CHECK_FALSE(has_a_cycle_through(inst.graph, members, 0, inst.a));
    // triangle {0,1,2} has value 0 in A; cycles through 3 only via the others
    members = {true, true, true, false};
    CHECK(has_a_cycle_through(inst.graph, members, 2, inst.a));
}

TEST_CASE("canonical cycle form and splitting") {
    std::vector<int> cyc{7, 2, 9, 4};
    std::vector<int> canon = canonical_cycle(cyc);
    CHECK(canon.front() == 2);
    CHECK(canon[1] < canon.back());
    // same cyclic sequence read in either direction
    CHECK(canonical_cycle(canon) == canon);
    std::vector<int> rev(cyc.rbegin(), cyc.rend());
    CHECK(canonical_cycle(rev) == canon);

    auto [arc1, arc2] = split_cycle(canon, 2, 9);
    CHECK(arc1.front() == 2);
    CHECK(arc1.back() == 9);
    CHECK(arc2.front() == 2);
    CHECK(arc2.back() == 9);
    CHECK(arc1.size() + arc2.size() == canon.size() + 2);
}

TEST_CASE("random graphs: every enumerated cycle is simple and closed") {
    std::mt19937_64 rng(13);
    GroupPool pool;
    for (int trial = 0; trial < 10; ++trial) {
        LGraph g = random_lgraph(pool.z4, 8, 45, rng);
        for (const Cycle& c : enumerate_simple_cycles(g, 100000)) {
            std::set<int> uniq(c.verts.begin(), c.verts.end());
            CHECK(uniq.size() == c.verts.size());
            for (size_t i = 0; i < c.verts.size(); ++i)
                CHECK(g.has_edge(c.verts[i], c.verts[(i + 1) % c.verts.size()]));
            CHECK(c.verts.front() == *std::min_element(c.verts.begin(), c.verts.end()));
        }
    }
}
