#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glarb/group.hpp"

namespace glarb {

/// A simple undirected graph with one group element per edge. Vertices are
/// dense 0-based ids. Immutable after construction; concurrent reads are safe.
class LGraph {
public:
    LGraph(int n, GroupPtr group, std::vector<std::pair<int, int>> edges,
           std::vector<Elem> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const GroupPtr& group() const { return group_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    std::optional<int> edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }
    /// Throws Error for an unknown edge.
    const Elem& label(int u, int v) const;
    const Elem& label_at(int edge_idx) const { return labels_[edge_idx]; }

private:
    int n_;
    GroupPtr group_;
    std::vector<std::pair<int, int>> edges_;  // sorted, u < v
    std::vector<Elem> labels_;                // aligned with edges_
    std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

/// Sum of edge labels over an edge subset (given by edge indices).
Elem gamma_value(const LGraph& g, std::span<const int> edge_indices);
/// Sum of labels along a vertex path v0 v1 ... vk (k edges).
Elem path_value(const LGraph& g, std::span<const int> path);
/// Sum of labels along a closed vertex cycle v0 v1 ... vk v0.
Elem cycle_value(const LGraph& g, std::span<const int> cycle);

/// An induced subgraph together with the original ids of its vertices.
struct InducedSubgraph {
    LGraph graph;
    std::vector<int> orig_ids;  // new id -> old id
};
InducedSubgraph induced_subgraph(const LGraph& g, std::span<const int> vertices);

/// A decidable description of the value set A.
///
/// Finite lists the members, Cofinite lists the complement (its size is the
/// omega of the threshold functions), SubgroupComplement means everything
/// outside the generated subgroup.
class ValueSet {
public:
    enum class Kind { Finite, Cofinite, SubgroupComplement };

    static ValueSet finite(std::vector<Elem> members);
    static ValueSet cofinite(GroupPtr group, std::vector<Elem> complement);
    static ValueSet subgroup_complement(SubgroupDesc sub);

    Kind kind() const { return kind_; }
    const GroupPtr& group() const { return group_; }
    /// Members (Finite), complement (Cofinite), or generators (SubgroupComplement).
    const std::vector<Elem>& elems() const { return elems_; }
    const SubgroupDesc& subgroup() const;

    bool contains(const Elem& e) const;
    /// Complement size; only defined for Cofinite.
    int omega() const;

    std::string str() const;

private:
    ValueSet(Kind k, GroupPtr g, std::vector<Elem> elems, std::optional<SubgroupDesc> sub);
    Kind kind_;
    GroupPtr group_;
    std::vector<Elem> elems_;  // sorted, deduplicated
    std::optional<SubgroupDesc> sub_;
};

/// Relabel g over the quotient group by projecting every edge label.
LGraph quotient_relabel(const LGraph& g, const SubgroupDesc& sub);
LGraph quotient_relabel(const LGraph& g, const QuotientMap& q);

/// A labelled graph plus its value set, as stored in one graph file.
struct Instance {
    LGraph graph;
    ValueSet a;
};

/// Parses a value-set description: `finite [e1;e2;...]`, `cofinite [...]` or
/// `co-subgroup [g1;...]` (the graph-file A line without the `A:` prefix).
ValueSet parse_value_set(const GroupPtr& group, const std::string& text, int line = 0);

Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);
std::string format_instance(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

/// FNV-1a over the exact file bytes; certificates embed this to pin the graph
/// they certify.
std::string fnv1a_hex(const std::string& bytes);
std::string hash_file(const std::string& path);

}  // namespace glarb
