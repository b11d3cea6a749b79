#pragma once

#include "glarb/arboricity.hpp"

namespace glarb {

/// BFS distance layering of a connected graph: L_0 = {start}, and every
/// vertex of L_i has a neighbor in L_{i-1} and none in earlier levels.
struct Leveling {
    std::vector<std::vector<int>> levels;
    int start = 0;
};

/// Leveling of g from v. Throws PreconditionError naming a stray vertex when
/// g is disconnected.
Leveling bfs_leveling(const LGraph& g, int v);

/// Same, restricted to the induced subgraph on `active` (original ids kept).
Leveling bfs_leveling_within(const LGraph& g, const std::vector<int>& active, int v);

/// A connected component Y of some level subgraph G[L_i], i >= 1, with
/// arb(G[Y]) >= ceil(arb(G)/2). Scans levels in order, components by least
/// vertex, and returns the first hit; existence is guaranteed, so a miss is
/// an InternalError.
struct HeavyLevel {
    int level = 0;
    std::vector<int> component;
    int arb_component = 0;
    int arb_whole = 0;
};
HeavyLevel heavy_level_component(const LGraph& g, const ValueSet& a, const Leveling& lv,
                                 const ArbBudget& budget = {});

/// Restriction of heavy_level_component to an induced subgraph (original ids).
HeavyLevel heavy_level_component_within(const LGraph& g, const std::vector<int>& active,
                                        const ValueSet& a, const Leveling& lv,
                                        const ArbBudget& budget = {});

}  // namespace glarb
