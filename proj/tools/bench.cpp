// Times the OpenMP kernels against their serial reference implementations and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "glarb/arboricity.hpp"
#include "glarb/constructions.hpp"

using namespace glarb;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Instance random_instance(int n, int percent, std::mt19937_64& rng) {
    GroupPtr z4 = GroupDesc::make(0, {4});
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (static_cast<int>(rng() % 100) < percent) {
                edges.emplace_back(i, j);
                labels.push_back(Elem(z4, {Int(static_cast<long>(rng() % 4))}));
            }
        }
    }
    LGraph g(n, z4, std::move(edges), std::move(labels));
    ValueSet a = ValueSet::finite({Elem(z4, {1})});
    return Instance{std::move(g), std::move(a)};
}

struct Timing {
    double serial_ms;
    double parallel_ms;
    bool equal;
};

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   results %s\n",
                name, t.serial_ms, t.parallel_ms, t.serial_ms / t.parallel_ms,
                t.equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::mt19937_64 rng(20240811);

    {
        Instance inst = random_instance(quick ? 13 : 15, 45, rng);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = enumerate_simple_cycles(inst.graph, 1u << 24, Exec::Serial);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto parallel = enumerate_simple_cycles(inst.graph, 1u << 24, Exec::Parallel);
        double tp = ms_since(t0);
        bool equal = serial.size() == parallel.size();
        for (size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].verts == parallel[i].verts;
        std::printf("cycle enumeration: %zu cycles on n=%d\n", serial.size(),
                    inst.graph.vertex_count());
        report("enumerate_simple_cycles", Timing{ts, tp, equal});
    }

    {
        GroupPtr z = GroupDesc::make(1, {});
        Elem one(z, {1});
        int n = quick ? 13 : 15;
        LGraph g = uniform_clique(z, one, n);
        ValueSet a = ValueSet::finite({Elem(z, {3})});
        auto t0 = std::chrono::steady_clock::now();
        ArbResult serial = arb_exact(g, a, {}, Exec::Serial);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        ArbResult parallel = arb_exact(g, a, {}, Exec::Parallel);
        double tp = ms_since(t0);
        bool equal = serial.value == parallel.value &&
                     serial.witness.part_of == parallel.witness.part_of;
        std::printf("arboricity solver: clique n=%d, value %d\n", n, serial.value);
        report("arb_exact (uniform clique)", Timing{ts, tp, equal});
    }

    {
        Instance inst = random_instance(quick ? 14 : 16, 75, rng);
        auto t0 = std::chrono::steady_clock::now();
        ArbResult serial = arb_exact(inst.graph, inst.a, {}, Exec::Serial);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        ArbResult parallel = arb_exact(inst.graph, inst.a, {}, Exec::Parallel);
        double tp = ms_since(t0);
        bool equal = serial.value == parallel.value &&
                     serial.witness.part_of == parallel.witness.part_of;
        std::printf("arboricity solver: random n=%d, value %d\n", inst.graph.vertex_count(),
                    serial.value);
        report("arb_exact (random)", Timing{ts, tp, equal});
    }
    return 0;
}
