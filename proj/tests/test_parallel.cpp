#include <doctest.h>

#include "support.hpp"

using namespace glarb;
using namespace glarb::test;

// The OpenMP kernels must match the serial reference bit for bit: same cycle
// lists, same arboricity values, same witnesses.

TEST_CASE("cycle enumeration: parallel equals serial") {
    std::mt19937_64 rng(23);
    GroupPool pool;
    for (int trial = 0; trial < 6; ++trial) {
        LGraph g = random_lgraph(pool.z4, 10, 45, rng);
        auto serial = enumerate_simple_cycles(g, 1u << 22, Exec::Serial);
        auto parallel = enumerate_simple_cycles(g, 1u << 22, Exec::Parallel);
        REQUIRE(serial.size() == parallel.size());
        for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].verts == parallel[i].verts);
    }
}

TEST_CASE("cycle enumeration: both modes overflow the same cap") {
    GroupPtr z = GroupDesc::make(1, {});
    LGraph k5 = uniform_clique(z, Elem(z, {1}), 5);
    CHECK_THROWS_AS(enumerate_simple_cycles(k5, 10, Exec::Serial), CapacityError);
    CHECK_THROWS_AS(enumerate_simple_cycles(k5, 10, Exec::Parallel), CapacityError);
}

TEST_CASE("arboricity solver: parallel equals serial, value and witness") {
    std::mt19937_64 rng(24);
    GroupPool pool;
    for (const GroupPtr& g : pool.all()) {
        for (int trial = 0; trial < 4; ++trial) {
            LGraph lg = random_lgraph(g, 8, 50, rng);
            ValueSet a = random_value_set(g, rng);
            ArbResult serial = arb_exact(lg, a, {}, Exec::Serial);
            ArbResult parallel = arb_exact(lg, a, {}, Exec::Parallel);
            CHECK(serial.value == parallel.value);
            CHECK(serial.witness.part_of == parallel.witness.part_of);
        }
    }
    Instance k9 = k9_z_a3();
    ArbResult serial = arb_exact(k9.graph, k9.a, {}, Exec::Serial);
    ArbResult parallel = arb_exact(k9.graph, k9.a, {}, Exec::Parallel);
    CHECK(serial.value == parallel.value);
    CHECK(serial.witness.part_of == parallel.witness.part_of);
}

TEST_CASE("find_a_cycle agrees across modes") {
    std::mt19937_64 rng(25);
    GroupPool pool;
    for (int trial = 0; trial < 8; ++trial) {
        LGraph g = random_lgraph(pool.z3, 9, 40, rng);
        ValueSet a = random_value_set(pool.z3, rng);
        auto serial = find_a_cycle(g, a, 3, 1u << 22, Exec::Serial);
        auto parallel = find_a_cycle(g, a, 3, 1u << 22, Exec::Parallel);
        CHECK(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->verts == parallel->verts);
            CHECK(serial->value == parallel->value);
        }
    }
}
