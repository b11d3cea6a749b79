#include <doctest.h>

#include <sstream>

#include "glarb/arboricity.hpp"
#include "support.hpp"

using namespace glarb;
using namespace glarb::test;

TEST_CASE("graph construction rejects bad input") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    CHECK_THROWS(LGraph(3, z, {{0, 0}}, {one}));
    CHECK_THROWS(LGraph(3, z, {{0, 1}, {1, 0}}, {one, one}));
    CHECK_THROWS(LGraph(2, z, {{0, 2}}, {one}));
    GroupPtr z2 = GroupDesc::make(0, {2});
    CHECK_THROWS_AS(LGraph(2, z, {{0, 1}}, {Elem(z2, {1})}), MismatchError);
}

TEST_CASE("gamma values") {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    LGraph tri = uniform_clique(z, one, 3);
    CHECK(gamma_value(tri, std::vector<int>{}) == Elem::zero(z));
    CHECK(gamma_value(tri, std::vector<int>{0, 1, 2}) == Elem(z, {3}));
    CHECK_THROWS(gamma_value(tri, std::vector<int>{5}));

    GroupPtr z2z2 = GroupDesc::make(0, {2, 2});
    Elem a(z2z2, {1, 0}), b(z2z2, {0, 1});
    LGraph c4(4, z2z2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {a, b, a, b});
    CHECK(cycle_value(c4, std::vector<int>{0, 1, 2, 3}).is_zero());
}

TEST_CASE("gamma additive over disjoint edge sets") {
    std::mt19937_64 rng(11);
    GroupPool pool;
    for (const GroupPtr& g : pool.all()) {
        LGraph lg = random_lgraph(g, 8, 60, rng);
        if (lg.edge_count() < 4) continue;
        std::vector<int> left, right;
        for (int e = 0; e < lg.edge_count(); ++e) (e % 2 ? left : right).push_back(e);
        std::vector<int> both = left;
        both.insert(both.end(), right.begin(), right.end());
        CHECK(gamma_value(lg, both) == gamma_value(lg, left) + gamma_value(lg, right));
    }
}

TEST_CASE("value set membership") {
    GroupPtr z = GroupDesc::make(1, {});
    ValueSet fin = ValueSet::finite({Elem(z, {3})});
    CHECK(fin.contains(Elem(z, {3})));
    CHECK_FALSE(fin.contains(Elem(z, {4})));

    ValueSet cof = ValueSet::cofinite(z, {Elem(z, {3})});
    CHECK_FALSE(cof.contains(Elem(z, {3})));
    CHECK(cof.contains(Elem(z, {4})));
    CHECK(cof.omega() == 1);

    SubgroupDesc even(z, {Elem(z, {2})});
    ValueSet odd = ValueSet::subgroup_complement(even);
    CHECK(odd.contains(Elem(z, {5})));
    CHECK_FALSE(odd.contains(Elem(z, {-2})));

    GroupPtr z2 = GroupDesc::make(0, {2});
    CHECK_THROWS_AS(ValueSet::cofinite(z2, {Elem(z2, {0}), Elem(z2, {1})}), PreconditionError);
    CHECK_THROWS_AS(ValueSet::subgroup_complement(SubgroupDesc(z2, {Elem(z2, {1})})),
                    PreconditionError);
}

TEST_CASE("quotient relabel projects labels") {
    GroupPtr z = GroupDesc::make(1, {});
    LGraph g(3, z, {{0, 1}, {1, 2}, {0, 2}}, {Elem(z, {1}), Elem(z, {2}), Elem(z, {3})});
    SubgroupDesc even(z, {Elem(z, {2})});
    LGraph q = quotient_relabel(g, even);
    CHECK(q.group()->str() == "Z/2");
    CHECK(q.label(0, 1) == Elem(q.group(), {1}));
    CHECK(q.label(1, 2) == Elem(q.group(), {0}));
    CHECK(q.label(0, 2) == Elem(q.group(), {1}));
}

TEST_CASE("quotient relabel preserves arboricity for co-subgroup A") {
    GroupPtr z4 = GroupDesc::make(0, {4});
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        LGraph g = random_lgraph(z4, 8, 40, rng);
        SubgroupDesc sub(z4, {Elem(z4, {2})});
        ValueSet a = ValueSet::subgroup_complement(sub);
        LGraph q = quotient_relabel(g, sub);
        ValueSet a_q = ValueSet::cofinite(q.group(), {Elem::zero(q.group())});
        CHECK(arb_oracle(g, a) == arb_oracle(q, a_q));
    }
}

TEST_CASE("instance files round trip") {
    Instance inst = k5_z_a3();
    std::string text = format_instance(inst);
    std::istringstream in(text);
    Instance again = load_instance(in);
    CHECK(format_instance(again) == text);
    CHECK(again.graph.vertex_count() == 5);
    CHECK(again.a.contains(Elem(again.graph.group(), {3})));
}

TEST_CASE("instance parse errors carry line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return load_instance(in);
    };
    CHECK_THROWS_AS(parse("group: Q\nvertices: 2\nA: finite [(1)]\n"), ParseError);
    CHECK_THROWS_AS(parse("group: Z\nvertices: 2\nA: finite []\n"), ParseError);
    CHECK_THROWS_AS(parse("group: Z\nvertices: 2\nA: finite [(1)]\n0 5 (1)\n"), ParseError);
    CHECK_THROWS_AS(parse("group: Z\nvertices: 2\n0 1 (1)\n"), ParseError);
    try {
        parse("group: Z\nvertices: 2\nA: finite [(1)]\n0 1 bad\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("file hash is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
