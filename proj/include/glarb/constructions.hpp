#pragma once

#include <optional>

#include "glarb/lgraph.hpp"

namespace glarb {

/// K_n with every edge labelled x.
LGraph uniform_clique(const GroupPtr& group, const Elem& x, int n);

/// Smallest q >= 3 with q*x in a, or nullopt when no such q exists. Decided
/// exactly: torsion elements are scanned over one period, infinite-order
/// elements are solved per value-set form.
std::optional<Int> smallest_multiple_in_a(const Elem& x, const ValueSet& a);

/// The unique d > 2 with d*x in a, when uniqueness is certifiable; otherwise
/// nullopt plus the reason uniqueness fails. Only Finite and Cofinite value
/// sets are accepted.
struct UniqueLength {
    std::optional<Int> d;
    std::string reason;
};
UniqueLength lower_bound_params(const Elem& x, const ValueSet& a);

/// K_{t*t} split into t blocks of t vertices: block-internal edges labelled y,
/// all cross edges labelled zero. Requires y of infinite order.
LGraph blocks_construction(const GroupPtr& group, const Elem& y, int t);

/// An unlabelled simple graph plus a marked edge subset.
struct PlainGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Encode odd-intersection-with-f cycles: edges of f labelled 1 over Z/2,
/// everything else 0, with A = {1}. The arboricity of the encoding equals the
/// minimum partition count avoiding cycles that meet f an odd number of times.
Instance eta_encoding(const PlainGraph& g, const std::vector<std::pair<int, int>>& f_edges);

}  // namespace glarb
