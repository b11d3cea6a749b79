#include "glarb/pathutil.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace glarb {

bool sorted_contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool sorted_subset(const std::vector<int>& inner, const std::vector<int>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> path_concat(const std::vector<std::vector<int>>& pieces) {
    std::vector<int> out;
    for (const auto& p : pieces) {
        if (p.empty()) throw InternalError("empty path piece");
        if (out.empty()) {
            out = p;
        } else {
            if (out.back() != p.front())
                throw InternalError("path pieces do not share a junction vertex");
            out.insert(out.end(), p.begin() + 1, p.end());
        }
    }
    return out;
}

std::vector<int> path_reversed(std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

VerifyReport check_simple_path(const LGraph& g, const std::vector<int>& p) {
    if (p.size() < 2) return VerifyReport::fail("path-shape", "path needs at least one edge");
    std::set<int> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return VerifyReport::fail("path-simple", "repeated vertex");
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1]))
            return VerifyReport::fail("path-edge", "missing edge (" + std::to_string(p[i]) + "," +
                                                       std::to_string(p[i + 1]) + ")");
    }
    return VerifyReport::pass();
}

std::vector<int> shortest_in_union(const std::vector<std::vector<int>>& paths, int from, int to) {
    std::map<int, std::set<int>> adj;
    for (const auto& p : paths) {
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            adj[p[i]].insert(p[i + 1]);
            adj[p[i + 1]].insert(p[i]);
        }
        if (!p.empty()) adj[p.front()];
    }
    std::map<int, int> parent;
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : adj[u]) {
            if (!parent.count(w)) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!parent.count(to)) throw InternalError("stored connectors do not join the endpoints");
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> bfs_path_within(const LGraph& g, const std::vector<int>& active, int from,
                                 int to) {
    std::vector<char> in_active(g.vertex_count(), false);
    for (int v : active) in_active[v] = true;
    std::vector<int> parent(g.vertex_count(), -1);
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : g.neighbors(u)) {
            if (in_active[w] && parent[w] < 0) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (parent[to] < 0) throw PreconditionError("no path between the requested endpoints");
    std::vector<int> path;
    for (int v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace glarb
