#include "glarb/cycles.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace glarb {

bool cycle_order(const Cycle& a, const Cycle& b) {
    std::vector<int> sa = a.verts, sb = b.verts;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return sa < sb;
    return a.verts < b.verts;
}

namespace {

// DFS from `anchor` over vertices > anchor; a cycle closes when the walk
// returns to the anchor. Requiring path[1] < path.back() keeps one of the two
// traversal directions, so every cycle is reported exactly once, anchored at
// its minimum vertex.
class AnchorEnum {
public:
    AnchorEnum(const LGraph& g, int anchor, std::uint64_t max_count,
               std::atomic<std::uint64_t>& total, std::atomic<bool>& overflow)
        : g_(g), anchor_(anchor), max_count_(max_count), total_(total), overflow_(overflow) {
        on_path_.assign(g.vertex_count(), false);
    }

    std::vector<Cycle> run() {
        path_.push_back(anchor_);
        on_path_[anchor_] = true;
        extend();
        return std::move(found_);
    }

private:
    void extend() {
        if (overflow_.load(std::memory_order_relaxed)) return;
        int u = path_.back();
        for (int w : g_.neighbors(u)) {
            if (w == anchor_ && path_.size() >= 3 && path_[1] < path_.back()) {
                if (total_.fetch_add(1, std::memory_order_relaxed) + 1 > max_count_) {
                    overflow_.store(true, std::memory_order_relaxed);
                    return;
                }
                found_.push_back(Cycle{path_});
            } else if (w > anchor_ && !on_path_[w]) {
                path_.push_back(w);
                on_path_[w] = true;
                extend();
                on_path_[w] = false;
                path_.pop_back();
                if (overflow_.load(std::memory_order_relaxed)) return;
            }
        }
    }

    const LGraph& g_;
    int anchor_;
    std::uint64_t max_count_;
    std::atomic<std::uint64_t>& total_;
    std::atomic<bool>& overflow_;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<Cycle> found_;
};

bool use_parallel(Exec exec, int work_hint) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) return true;
    if (exec == Exec::Serial) return false;
    return work_hint >= 32 && omp_get_max_threads() > 1;
#else
    (void)exec;
    (void)work_hint;
    return false;
#endif
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const LGraph& g, std::uint64_t max_count,
                                           Exec exec) {
    if (max_count < 1) throw PreconditionError("cycle cap must be at least 1");
    const int n = g.vertex_count();
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> overflow{false};
    std::vector<std::vector<Cycle>> per_anchor(n);

    if (use_parallel(exec, n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int a = 0; a < n; ++a) {
            if (!overflow.load(std::memory_order_relaxed))
                per_anchor[a] = AnchorEnum(g, a, max_count, total, overflow).run();
        }
    } else {
        for (int a = 0; a < n && !overflow.load(std::memory_order_relaxed); ++a)
            per_anchor[a] = AnchorEnum(g, a, max_count, total, overflow).run();
    }
    if (overflow.load())
        throw CapacityError("more than " + std::to_string(max_count) +
                            " simple cycles; raise the cap to enumerate them all");

    std::vector<Cycle> out;
    out.reserve(total.load());
    for (auto& v : per_anchor)
        for (auto& c : v) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), cycle_order);
    return out;
}

std::optional<FoundCycle> find_a_cycle(const LGraph& g, const ValueSet& a, int min_len,
                                       std::uint64_t max_count, Exec exec) {
    if (min_len < 3) throw PreconditionError("cycles have length at least 3");
    std::vector<Cycle> cycles = enumerate_simple_cycles(g, max_count, exec);
    const Cycle* best = nullptr;
    for (const Cycle& c : cycles) {
        if (c.length() < min_len) continue;
        if (best && best->length() <= c.length()) continue;
        if (a.contains(cycle_value(g, c.verts))) best = &c;
    }
    if (!best) return std::nullopt;
    return FoundCycle{best->verts, cycle_value(g, best->verts)};
}

namespace {

// Paths from v back to v inside the member mask, direction-deduplicated the
// same way as AnchorEnum but without the anchor-minimality restriction.
class ThroughVertexSearch {
public:
    ThroughVertexSearch(const LGraph& g, const std::vector<char>& members, int v,
                        const ValueSet& a)
        : g_(g), members_(members), v_(v), a_(a) {
        on_path_.assign(g.vertex_count(), false);
    }

    bool run() {
        path_.push_back(v_);
        on_path_[v_] = true;
        return extend(Elem::zero(g_.group()));
    }

private:
    bool extend(const Elem& sum) {
        int u = path_.back();
        for (int w : g_.neighbors(u)) {
            if (!members_[w]) continue;
            if (w == v_ && path_.size() >= 3 && path_[1] < path_.back()) {
                if (a_.contains(sum + g_.label(u, w))) return true;
            } else if (w != v_ && !on_path_[w]) {
                path_.push_back(w);
                on_path_[w] = true;
                bool hit = extend(sum + g_.label(u, w));
                on_path_[w] = false;
                path_.pop_back();
                if (hit) return true;
            }
        }
        return false;
    }

    const LGraph& g_;
    const std::vector<char>& members_;
    int v_;
    const ValueSet& a_;
    std::vector<int> path_;
    std::vector<char> on_path_;
};

}  // namespace

bool has_a_cycle_through(const LGraph& g, const std::vector<char>& members, int v,
                         const ValueSet& a) {
    return ThroughVertexSearch(g, members, v, a).run();
}

std::vector<int> canonical_cycle(const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    if (k < 3) throw PreconditionError("cycle too short");
    int pos = static_cast<int>(std::min_element(verts.begin(), verts.end()) - verts.begin());
    int next = verts[(pos + 1) % k];
    int prev = verts[(pos + k - 1) % k];
    std::vector<int> out;
    out.reserve(k);
    int step = (next < prev) ? 1 : -1;
    for (int i = 0, p = pos; i < k; ++i, p = (p + step + k) % k) out.push_back(verts[p]);
    return out;
}

std::pair<std::vector<int>, std::vector<int>> split_cycle(const std::vector<int>& cycle, int u,
                                                          int v) {
    const int k = static_cast<int>(cycle.size());
    int iu = -1, iv = -1;
    for (int i = 0; i < k; ++i) {
        if (cycle[i] == u) iu = i;
        if (cycle[i] == v) iv = i;
    }
    if (iu < 0 || iv < 0 || iu == iv)
        throw PreconditionError("split vertices must be distinct cycle vertices");
    std::vector<int> arc1, arc2;
    for (int i = iu;; i = (i + 1) % k) {
        arc1.push_back(cycle[i]);
        if (i == iv) break;
    }
    for (int i = iv;; i = (i + 1) % k) {
        arc2.push_back(cycle[i]);
        if (i == iu) break;
    }
    std::reverse(arc2.begin(), arc2.end());  // orient u -> v
    return {arc1, arc2};
}

}  // namespace glarb
