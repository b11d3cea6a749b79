#pragma once

#include <cstdint>

#include "glarb/certs.hpp"
#include "glarb/cycles.hpp"

namespace glarb {

struct ArbBudget {
    std::uint64_t max_nodes = 200'000'000;
};

/// Exact arboricity with a verifying witness. `lower_exhausted` records that
/// the search for value-1 parts was run to completion, which is the only
/// lower-bound evidence the solver produces.
struct ArbResult {
    int value = 0;
    PartitionCert witness;
    bool lower_exhausted = false;
    std::uint64_t nodes = 0;
};

/// Exact minimum k such that the vertices split into k parts with no part
/// inducing a cycle of value in a. Iterative deepening on k; backtracking
/// assignment in input vertex order with symmetry breaking (vertex i may only
/// open part 1 + max part used before it); a branch dies as soon as a part
/// gains an A-valued cycle through the new vertex.
///
/// Serial and Parallel modes return identical results; Parallel splits the
/// top of the search tree over OpenMP threads and keeps the first success in
/// branch order. Throws ResourceError when the node budget runs out.
ArbResult arb_exact(const LGraph& g, const ValueSet& a, const ArbBudget& budget = {},
                    Exec exec = Exec::Auto);

/// Independent brute-force arboricity: minimum over all set partitions,
/// enumerated as restricted growth strings, with per-part feasibility decided
/// by full cycle enumeration. Test oracle only; guarded to n <= 12.
int arb_oracle(const LGraph& g, const ValueSet& a);

/// arb(G) equals the max over connected components (recomputed both ways).
bool check_component_law(const LGraph& g, const ValueSet& a, const ArbBudget& budget = {});

/// arb(G - v) >= arb(G) - 1 (recomputed both ways).
bool check_deletion_law(const LGraph& g, const ValueSet& a, int v, const ArbBudget& budget = {});

/// t pairwise vertex-disjoint cycles of value in a, produced greedily by
/// taking a shortest A-cycle and deleting its vertices. Requires
/// arb(G) >= 2t (checked); greedy failure under that hypothesis is reported
/// as an InternalError because the theory rules it out.
std::vector<CycleCert> disjoint_a_cycles(const LGraph& g, const ValueSet& a, int t,
                                         const ArbBudget& budget = {});

}  // namespace glarb
