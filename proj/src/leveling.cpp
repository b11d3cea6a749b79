#include "glarb/leveling.hpp"

#include <algorithm>
#include <deque>

namespace glarb {

Leveling bfs_leveling_within(const LGraph& g, const std::vector<int>& active, int v) {
    std::vector<char> in_active(g.vertex_count(), false);
    for (int u : active) in_active[u] = true;
    if (v < 0 || v >= g.vertex_count() || !in_active[v])
        throw PreconditionError("start vertex " + std::to_string(v) + " not in the graph");

    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    int maxd = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (in_active[w] && dist[w] < 0) {
                dist[w] = dist[u] + 1;
                maxd = std::max(maxd, dist[w]);
                queue.push_back(w);
            }
        }
    }
    for (int u : active) {
        if (dist[u] < 0)
            throw PreconditionError("graph is disconnected: vertex " + std::to_string(u) +
                                    " is unreachable from " + std::to_string(v));
    }
    Leveling lv;
    lv.start = v;
    lv.levels.assign(maxd + 1, {});
    std::vector<int> sorted(active);
    std::sort(sorted.begin(), sorted.end());
    for (int u : sorted) lv.levels[dist[u]].push_back(u);
    return lv;
}

Leveling bfs_leveling(const LGraph& g, int v) {
    std::vector<int> all;
    for (int u = 0; u < g.vertex_count(); ++u) all.push_back(u);
    return bfs_leveling_within(g, all, v);
}

namespace {

std::vector<std::vector<int>> components_within(const LGraph& g, const std::vector<int>& verts) {
    std::vector<char> in_set(g.vertex_count(), false);
    for (int v : verts) in_set[v] = true;
    std::vector<char> seen(g.vertex_count(), false);
    std::vector<std::vector<int>> comps;
    std::vector<int> sorted(verts);
    std::sort(sorted.begin(), sorted.end());
    for (int s : sorted) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (in_set[w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

HeavyLevel heavy_level_component_within(const LGraph& g, const std::vector<int>& active,
                                        const ValueSet& a, const Leveling& lv,
                                        const ArbBudget& budget) {
    InducedSubgraph whole = induced_subgraph(g, active);
    int arb_whole = arb_exact(whole.graph, a, budget).value;
    int target = (arb_whole + 1) / 2;
    for (size_t i = 1; i < lv.levels.size(); ++i) {
        for (const auto& comp : components_within(g, lv.levels[i])) {
            InducedSubgraph sub = induced_subgraph(g, comp);
            int arb_comp = arb_exact(sub.graph, a, budget).value;
            if (arb_comp >= target)
                return HeavyLevel{static_cast<int>(i), comp, arb_comp, arb_whole};
        }
    }
    if (arb_whole <= 1 && lv.levels.size() == 1) {
        // Single-vertex-level graph: the start alone forms level 0 and there
        // is nothing below; arb(G) = 1 is matched by any single vertex.
        return HeavyLevel{0, lv.levels[0], 1, arb_whole};
    }
    throw InternalError("no level component reaches ceil(arb/2); this contradicts the theory");
}

HeavyLevel heavy_level_component(const LGraph& g, const ValueSet& a, const Leveling& lv,
                                 const ArbBudget& budget) {
    std::vector<int> all;
    for (int u = 0; u < g.vertex_count(); ++u) all.push_back(u);
    return heavy_level_component_within(g, all, a, lv, budget);
}

}  // namespace glarb
