#pragma once

// Shared helpers for the test suites: small-group element enumeration, an
// independent closure oracle, instance builders and seeded random instances.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "glarb/chain.hpp"
#include "glarb/constructions.hpp"
#include "glarb/extract.hpp"

namespace glarb::test {

inline std::vector<Elem> all_elements(const GroupPtr& g) {
    auto size = g->size();
    if (!size || !size->fits_sint_p()) throw Error("group too large to enumerate");
    std::vector<Elem> out{Elem::zero(g)};
    for (size_t i = 0; i < g->moduli().size(); ++i) {
        std::vector<Elem> next;
        for (const Elem& base : out) {
            for (Int c = 0; c < g->moduli()[i]; ++c) {
                std::vector<Int> coords = base.coords();
                coords[g->free_rank() + i] = c;
                next.emplace_back(g, coords);
            }
        }
        out = std::move(next);
    }
    return out;
}

// Breadth-first closure of the generated subgroup; independent of the lattice
// membership route.
inline std::set<Elem> closure_oracle(const GroupPtr& g, const std::vector<Elem>& gens) {
    std::set<Elem> seen{Elem::zero(g)};
    std::vector<Elem> frontier{Elem::zero(g)};
    while (!frontier.empty()) {
        Elem cur = frontier.back();
        frontier.pop_back();
        for (const Elem& gen : gens) {
            for (const Elem& next : {cur + gen, cur - gen}) {
                if (seen.insert(next).second) frontier.push_back(next);
            }
        }
    }
    return seen;
}

struct GroupPool {
    GroupPtr z = GroupDesc::make(1, {});
    GroupPtr z2 = GroupDesc::make(0, {2});
    GroupPtr z3 = GroupDesc::make(0, {3});
    GroupPtr z4 = GroupDesc::make(0, {4});
    GroupPtr z2z2 = GroupDesc::make(0, {2, 2});

    std::vector<GroupPtr> all() const { return {z, z2, z3, z4, z2z2}; }
};

inline Elem random_elem(const GroupPtr& g, std::mt19937_64& rng, long free_span = 5) {
    std::vector<Int> coords;
    for (int i = 0; i < g->free_rank(); ++i)
        coords.push_back(Int(static_cast<long>(rng() % (2 * free_span + 1)) - free_span));
    for (const Int& n : g->moduli())
        coords.push_back(Int(static_cast<long>(rng() % n.get_ui())));
    return Elem(g, std::move(coords));
}

inline LGraph random_lgraph(const GroupPtr& g, int n, int edge_percent, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (static_cast<int>(rng() % 100) < edge_percent) {
                edges.emplace_back(i, j);
                labels.push_back(random_elem(g, rng, 3));
            }
        }
    }
    return LGraph(n, g, std::move(edges), std::move(labels));
}

inline ValueSet random_value_set(const GroupPtr& g, std::mt19937_64& rng) {
    bool cofinite = rng() % 2 == 0;
    int count = 1 + static_cast<int>(rng() % 3);
    std::vector<Elem> elems;
    for (int i = 0; i < count; ++i) elems.push_back(random_elem(g, rng, 4));
    if (!cofinite) return ValueSet::finite(std::move(elems));
    auto size = g->size();
    if (size) {
        // keep the complement a strict subset
        std::set<Elem> uniq(elems.begin(), elems.end());
        while (Int(static_cast<long>(uniq.size())) >= *size) uniq.erase(uniq.begin());
        elems.assign(uniq.begin(), uniq.end());
    }
    return ValueSet::cofinite(g, std::move(elems));
}

// The standard hard small instance: K_4 with uniform label 1 over Z/3 and
// A = {0}; its arboricity is 2 and the triangles are the only A-cycles.
inline Instance k4_mod3() {
    GroupPtr z3 = GroupDesc::make(0, {3});
    Elem one(z3, {1});
    return Instance{uniform_clique(z3, one, 4), ValueSet::finite({Elem::zero(z3)})};
}

// K_5 with uniform label 1 over Z and A = {3}: arboricity 3, every A-cycle is
// a triangle.
inline Instance k5_z_a3() {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    return Instance{uniform_clique(z, one, 5), ValueSet::finite({Elem(z, {3})})};
}

// K_9 variant of the same family: arboricity 5.
inline Instance k9_z_a3() {
    GroupPtr z = GroupDesc::make(1, {});
    Elem one(z, {1});
    return Instance{uniform_clique(z, one, 9), ValueSet::finite({Elem(z, {3})})};
}

// A staged-chain scaffold: core vertices 0..core_n-1 form the innermost set;
// band i consists of the single hub vertex core_n+i-1 adjacent to every core
// vertex, so every core pair has the band path x-hub-y. Core edges are given
// explicitly and must make the core connected.
struct HubSpec {
    GroupPtr group;
    int core_n = 0;
    std::vector<std::tuple<int, int, Elem>> core_edges;
    int bands = 0;
    int ell = 2;
    // label of the hub edge (band, core vertex); defaults to zero
    std::function<Elem(int, int)> hub_label;
};

struct HubInstance {
    LGraph graph;
    NestedChain chain;
    std::vector<int> core;
};

inline HubInstance build_hub_instance(const HubSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (const auto& [u, v, l] : spec.core_edges) {
        edges.emplace_back(u, v);
        labels.push_back(l);
    }
    Elem zero = Elem::zero(spec.group);
    for (int b = 1; b <= spec.bands; ++b) {
        int hub = spec.core_n + b - 1;
        for (int v = 0; v < spec.core_n; ++v) {
            edges.emplace_back(v, hub);
            labels.push_back(spec.hub_label ? spec.hub_label(b, v) : zero);
        }
    }
    int n = spec.core_n + spec.bands;
    LGraph g(n, spec.group, std::move(edges), std::move(labels));

    NestedChain chain;
    chain.ell = spec.ell;
    chain.m = spec.bands;
    std::vector<int> core;
    for (int v = 0; v < spec.core_n; ++v) core.push_back(v);
    for (int i = 0; i <= spec.bands; ++i) {
        std::vector<int> s = core;
        for (int b = i + 1; b <= spec.bands; ++b) s.push_back(spec.core_n + b - 1);
        chain.sets.push_back(s);
    }
    for (int b = 1; b <= spec.bands; ++b) {
        ExplicitBand band;
        int hub = spec.core_n + b - 1;
        for (int x = 0; x < spec.core_n; ++x)
            for (int y = x + 1; y < spec.core_n; ++y) band.paths[{x, y}] = {x, hub, y};
        chain.bands.emplace_back(std::move(band));
    }
    return HubInstance{std::move(g), std::move(chain), std::move(core)};
}

// A subdivision of K_t: branching vertices 0..t-1, each pair joined through
// one private subdivision vertex, with the pair value on the first hop.
struct SubdividedClique {
    LGraph graph;
    SubdivCert cert;
};

inline SubdividedClique build_subdivided_clique(
    const GroupPtr& group, int t, const std::function<Elem(int, int)>& pair_value) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    SubdivCert cert;
    cert.min_len = 1;
    for (int v = 0; v < t; ++v) cert.branching.push_back(v);
    int next = t;
    Elem zero = Elem::zero(group);
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int mid = next++;
            edges.emplace_back(i, mid);
            labels.push_back(pair_value(i, j));
            edges.emplace_back(mid, j);
            labels.push_back(zero);
            cert.paths[{i, j}] = {i, mid, j};
        }
    }
    LGraph g(next, group, std::move(edges), std::move(labels));
    return SubdividedClique{std::move(g), std::move(cert)};
}

}  // namespace glarb::test
