#pragma once

#include "glarb/certs.hpp"

namespace glarb {

bool sorted_contains(const std::vector<int>& sorted, int v);
bool sorted_subset(const std::vector<int>& inner, const std::vector<int>& outer);
std::vector<int> sorted_unique(std::vector<int> v);

/// Glue consecutive pieces; each piece must start where the previous ended.
std::vector<int> path_concat(const std::vector<std::vector<int>>& pieces);
std::vector<int> path_reversed(std::vector<int> p);

/// Simple path check: at least one edge, no repeats, every hop an edge of g.
VerifyReport check_simple_path(const LGraph& g, const std::vector<int>& p);

/// BFS shortest path in the graph formed by the union of the given paths.
std::vector<int> shortest_in_union(const std::vector<std::vector<int>>& paths, int from, int to);

/// BFS shortest path inside the induced subgraph on `active` (original ids).
std::vector<int> bfs_path_within(const LGraph& g, const std::vector<int>& active, int from,
                                 int to);

}  // namespace glarb
