#include "glarb/constructions.hpp"

#include <algorithm>
#include <set>

namespace glarb {

LGraph uniform_clique(const GroupPtr& group, const Elem& x, int n) {
    if (n < 1) throw PreconditionError("need n >= 1");
    require_group(x, *group, "clique label");
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            labels.push_back(x);
        }
    }
    return LGraph(n, group, std::move(edges), std::move(labels));
}

namespace {

// Solve q*x == target over the integers for infinite-order x; nullopt when no
// integer q works.
std::optional<Int> solve_multiple(const Elem& x, const Elem& target) {
    const auto& g = *x.group();
    int pivot = -1;
    for (int i = 0; i < g.free_rank(); ++i) {
        if (x.coords()[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0) return std::nullopt;  // not infinite order
    if (target.coords()[pivot] % x.coords()[pivot] != 0) return std::nullopt;
    Int q = target.coords()[pivot] / x.coords()[pivot];
    if (x.times(q) == target) return q;
    return std::nullopt;
}

}  // namespace

std::optional<Int> smallest_multiple_in_a(const Elem& x, const ValueSet& a) {
    auto ord = x.order();
    if (ord) {
        // One full period beyond 2 covers every residue of q mod ord(x).
        Int limit = *ord + 2;
        for (Int q = 3; q <= limit; ++q) {
            if (a.contains(x.times(q))) return q;
        }
        return std::nullopt;
    }
    switch (a.kind()) {
        case ValueSet::Kind::Finite: {
            std::optional<Int> best;
            for (const Elem& e : a.elems()) {
                auto q = solve_multiple(x, e);
                if (q && *q >= 3 && (!best || *q < *best)) best = *q;
            }
            return best;
        }
        case ValueSet::Kind::Cofinite: {
            // Multiples are pairwise distinct, so at most |complement| of
            // them are excluded.
            Int limit = Int(static_cast<long>(a.elems().size())) + 3;
            for (Int q = 3; q <= limit; ++q) {
                if (a.contains(x.times(q))) return q;
            }
            return std::nullopt;
        }
        case ValueSet::Kind::SubgroupComplement: {
            // If x lies in the subgroup every multiple does; otherwise one of
            // 3x, 4x escapes it (both inside would put x = 4x - 3x inside).
            for (Int q = 3; q <= 4; ++q) {
                if (a.contains(x.times(q))) return q;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

UniqueLength lower_bound_params(const Elem& x, const ValueSet& a) {
    if (a.kind() == ValueSet::Kind::SubgroupComplement)
        throw PreconditionError("uniqueness scan needs a finite or cofinite value set");
    auto ord = x.order();
    if (ord) {
        Int limit = *ord + 2;
        for (Int q = 3; q <= limit; ++q) {
            if (a.contains(x.times(q)))
                return {std::nullopt,
                        "x has order " + ord->get_str() +
                            ", so qualifying lengths repeat with that period and are never "
                            "unique"};
        }
        return {std::nullopt, "no multiple of x beyond 2 lies in A"};
    }
    if (a.kind() == ValueSet::Kind::Cofinite)
        return {std::nullopt,
                "for infinite-order x all but at most " + std::to_string(a.elems().size()) +
                    " lengths qualify, so uniqueness always fails"};
    std::set<Int> hits;
    for (const Elem& e : a.elems()) {
        auto q = solve_multiple(x, e);
        if (q && *q >= 3) hits.insert(*q);
    }
    if (hits.empty()) return {std::nullopt, "no multiple of x beyond 2 lies in A"};
    if (hits.size() > 1) {
        std::string list;
        for (const Int& q : hits) list += " " + q.get_str();
        return {std::nullopt, "several lengths qualify:" + list};
    }
    return {*hits.begin(), ""};
}

LGraph blocks_construction(const GroupPtr& group, const Elem& y, int t) {
    if (t < 1) throw PreconditionError("need t >= 1");
    require_group(y, *group, "block label");
    if (y.order())
        throw PreconditionError(
            "block construction needs an infinite-order label; finite order falls under the "
            "uniform-clique case");
    const int n = t * t;
    Elem zero = Elem::zero(group);
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
            labels.push_back(i / t == j / t ? y : zero);  // block b holds ids bt..bt+t-1
        }
    }
    return LGraph(n, group, std::move(edges), std::move(labels));
}

Instance eta_encoding(const PlainGraph& g, const std::vector<std::pair<int, int>>& f_edges) {
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
        edge_set.insert({u, v});
    }
    std::set<std::pair<int, int>> marked;
    for (auto [u, v] : f_edges) {
        if (u > v) std::swap(u, v);
        if (!edge_set.count({u, v}))
            throw PreconditionError("marked edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge of the graph");
        marked.insert({u, v});
    }
    GroupPtr z2 = GroupDesc::make(0, {2});
    Elem one(z2, {1});
    Elem zero = Elem::zero(z2);
    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (const auto& e : edge_set) {
        edges.push_back(e);
        labels.push_back(marked.count(e) ? one : zero);
    }
    LGraph lg(g.n, z2, std::move(edges), std::move(labels));
    return Instance{std::move(lg), ValueSet::finite({one})};
}

}  // namespace glarb
