#include "glarb/arboricity.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glarb {

namespace {

struct SearchShared {
    const LGraph& g;
    const ValueSet& a;
    int k;
    std::atomic<std::uint64_t>& nodes;
    std::uint64_t max_nodes;
    std::atomic<bool>& out_of_budget;
    // Parallel cancellation: frontier entries above a known success may stop.
    std::atomic<int>* winner = nullptr;
    int my_index = 0;
};

bool vertex_fits(const LGraph& g, const ValueSet& a, const std::vector<int>& part_of, int v,
                 int p) {
    std::vector<char> members(g.vertex_count(), false);
    for (int u = 0; u < v; ++u)
        if (part_of[u] == p) members[u] = true;
    members[v] = true;
    return !has_a_cycle_through(g, members, v, a);
}

// Depth-first completion of a partial assignment. part_of[0..v-1] are set.
bool assign_from(SearchShared& s, std::vector<int>& part_of, int v, int max_used) {
    if (v == s.g.vertex_count()) return true;
    std::uint64_t seen = s.nodes.fetch_add(1, std::memory_order_relaxed);
    if (seen >= s.max_nodes) {
        s.out_of_budget.store(true, std::memory_order_relaxed);
        return false;
    }
    if ((seen & 1023) == 0) {
        if (s.winner && s.winner->load(std::memory_order_relaxed) < s.my_index) return false;
        if (s.out_of_budget.load(std::memory_order_relaxed)) return false;
    }
    int limit = std::min(s.k, max_used + 1);
    for (int p = 1; p <= limit; ++p) {
        if (!vertex_fits(s.g, s.a, part_of, v, p)) continue;
        part_of[v] = p;
        if (assign_from(s, part_of, v + 1, std::max(max_used, p))) return true;
        part_of[v] = 0;
    }
    return false;
}

struct Frontier {
    std::vector<int> part_of;  // prefix assignment
    int depth;
    int max_used;
};

// All valid prefixes of the serial search down to `depth`, in the serial
// visit order.
void expand_frontier(const LGraph& g, const ValueSet& a, int k, int depth,
                     std::vector<int>& part_of, int v, int max_used, std::vector<Frontier>& out) {
    if (v == depth || v == g.vertex_count()) {
        out.push_back(Frontier{part_of, v, max_used});
        return;
    }
    int limit = std::min(k, max_used + 1);
    for (int p = 1; p <= limit; ++p) {
        if (!vertex_fits(g, a, part_of, v, p)) continue;
        part_of[v] = p;
        expand_frontier(g, a, k, depth, part_of, v + 1, std::max(max_used, p), out);
        part_of[v] = 0;
    }
}

std::optional<std::vector<int>> feasible_serial(const LGraph& g, const ValueSet& a, int k,
                                                std::atomic<std::uint64_t>& nodes,
                                                std::uint64_t max_nodes,
                                                std::atomic<bool>& out_of_budget) {
    std::vector<int> part_of(g.vertex_count(), 0);
    SearchShared s{g, a, k, nodes, max_nodes, out_of_budget};
    if (assign_from(s, part_of, 0, 0)) return part_of;
    return std::nullopt;
}

std::optional<std::vector<int>> feasible_parallel(const LGraph& g, const ValueSet& a, int k,
                                                  std::atomic<std::uint64_t>& nodes,
                                                  std::uint64_t max_nodes,
                                                  std::atomic<bool>& out_of_budget) {
#ifndef _OPENMP
    return feasible_serial(g, a, k, nodes, max_nodes, out_of_budget);
#else
    int threads = omp_get_max_threads();
    int depth = 0;
    std::vector<Frontier> frontier;
    {
        std::vector<int> part_of(g.vertex_count(), 0);
        // Deepen until there is enough work to spread, or the tree is exhausted.
        for (depth = 1; depth <= g.vertex_count(); ++depth) {
            frontier.clear();
            expand_frontier(g, a, k, depth, part_of, 0, 0, frontier);
            if (static_cast<int>(frontier.size()) >= 8 * threads || depth == g.vertex_count())
                break;
        }
    }
    const int fcount = static_cast<int>(frontier.size());
    std::atomic<int> winner{fcount};
    std::vector<std::vector<int>> results(fcount);

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < fcount; ++i) {
        if (winner.load(std::memory_order_relaxed) < i) continue;
        if (out_of_budget.load(std::memory_order_relaxed)) continue;
        Frontier& f = frontier[i];
        SearchShared s{g, a, k, nodes, max_nodes, out_of_budget, &winner, i};
        std::vector<int> part_of = f.part_of;
        if (assign_from(s, part_of, f.depth, f.max_used)) {
            results[i] = part_of;
            int cur = winner.load();
            while (i < cur && !winner.compare_exchange_weak(cur, i)) {
            }
        }
    }
    // The witness is the one the serial order would find first: the lowest
    // successful frontier index. Everything below it ran to a full stop.
    for (int i = 0; i < fcount; ++i)
        if (!results[i].empty()) return results[i];
    return std::nullopt;
#endif
}

bool use_parallel_arb(Exec exec, const LGraph& g) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) return true;
    if (exec == Exec::Serial) return false;
    return g.vertex_count() >= 12 && omp_get_max_threads() > 1;
#else
    (void)exec;
    (void)g;
    return false;
#endif
}

}  // namespace

ArbResult arb_exact(const LGraph& g, const ValueSet& a, const ArbBudget& budget, Exec exec) {
    if (g.vertex_count() == 0) throw PreconditionError("arboricity of the empty graph");
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    const bool parallel = use_parallel_arb(exec, g);

    for (int k = 1; k <= g.vertex_count(); ++k) {
        auto witness = parallel
                           ? feasible_parallel(g, a, k, nodes, budget.max_nodes, out_of_budget)
                           : feasible_serial(g, a, k, nodes, budget.max_nodes, out_of_budget);
        if (out_of_budget.load())
            throw ResourceError("arboricity search exceeded " + std::to_string(budget.max_nodes) +
                                " nodes; best known bounds: value > " + std::to_string(k - 1) +
                                " (exhausted), value <= " + std::to_string(g.vertex_count()) +
                                " (singletons)");
        if (witness) {
            ArbResult res;
            res.value = k;
            res.witness = PartitionCert{*witness, k};
            res.lower_exhausted = true;  // every smaller k was searched to the end
            res.nodes = nodes.load();
            return res;
        }
    }
    throw InternalError("no partition found even with singleton parts");
}

namespace {

// Feasibility of one block, memoized per vertex-set bitmask. Decided by full
// cycle enumeration, independently of the solver's incremental check.
struct BlockCache {
    const LGraph& g;
    const ValueSet& a;
    std::map<std::uint64_t, bool> memo;

    bool block_ok(const std::vector<int>& members) {
        std::uint64_t mask = 0;
        for (int v : members) mask |= (1ull << v);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        InducedSubgraph sub = induced_subgraph(g, members);
        bool ok = true;
        for (const Cycle& c : enumerate_simple_cycles(sub.graph, kDefaultCycleCap, Exec::Serial)) {
            if (a.contains(cycle_value(sub.graph, c.verts))) {
                ok = false;
                break;
            }
        }
        memo.emplace(mask, ok);
        return ok;
    }
};

}  // namespace

int arb_oracle(const LGraph& g, const ValueSet& a) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionError("arboricity of the empty graph");
    if (n > 12) throw PreconditionError("oracle is guarded to n <= 12, got n = " +
                                        std::to_string(n));
    BlockCache cache{g, a, {}};
    int best = n;

    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks < best) {
            bool ok = true;
            for (int b = 0; b < blocks && ok; ++b) {
                std::vector<int> members;
                for (int v = 0; v < n; ++v)
                    if (rgs[v] == b) members.push_back(v);
                ok = cache.block_ok(members);
            }
            if (ok) best = blocks;
        }
        // next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int maxp = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= maxp) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            rgs[i] = 0;
        }
        if (i == 0) break;
    }
    return best;
}

bool check_component_law(const LGraph& g, const ValueSet& a, const ArbBudget& budget) {
    std::vector<int> comp(g.vertex_count(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    int max_arb = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] == c) members.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, members);
        max_arb = std::max(max_arb, arb_exact(sub.graph, a, budget).value);
    }
    return max_arb == arb_exact(g, a, budget).value;
}

bool check_deletion_law(const LGraph& g, const ValueSet& a, int v, const ArbBudget& budget) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    if (g.vertex_count() == 1) return true;  // nothing left to compare
    std::vector<int> rest;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) rest.push_back(u);
    InducedSubgraph sub = induced_subgraph(g, rest);
    return arb_exact(sub.graph, a, budget).value >= arb_exact(g, a, budget).value - 1;
}

std::vector<CycleCert> disjoint_a_cycles(const LGraph& g, const ValueSet& a, int t,
                                         const ArbBudget& budget) {
    if (t < 1) throw PreconditionError("need t >= 1");
    int arb = arb_exact(g, a, budget).value;
    if (arb < 2 * t)
        throw PreconditionError("disjoint cycles need arboricity at least " +
                                std::to_string(2 * t) + ", graph has " + std::to_string(arb));
    std::vector<CycleCert> out;
    std::vector<int> alive;
    for (int v = 0; v < g.vertex_count(); ++v) alive.push_back(v);
    for (int i = 0; i < t; ++i) {
        InducedSubgraph sub = induced_subgraph(g, alive);
        auto found = find_a_cycle(sub.graph, a, 3);
        if (!found)
            throw InternalError("greedy step found no A-cycle although arboricity admits " +
                                std::to_string(t) + " disjoint ones");
        std::vector<int> orig;
        for (int v : found->verts) orig.push_back(sub.orig_ids[v]);
        out.push_back(CycleCert{orig, found->value, 3});
        std::vector<int> next;
        for (int v : alive)
            if (std::find(orig.begin(), orig.end(), v) == orig.end()) next.push_back(v);
        alive = std::move(next);
    }
    return out;
}

}  // namespace glarb
