#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "glarb/lgraph.hpp"

namespace glarb {

/// Execution mode for the parallel kernels. Serial is the reference
/// implementation; Parallel runs the same search split over OpenMP threads
/// and produces bit-identical results.
enum class Exec { Serial, Parallel, Auto };

/// A simple cycle in canonical form: starts at its smallest vertex and the
/// second vertex is smaller than the last, so each cycle has one encoding.
struct Cycle {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
};

/// Canonical enumeration order: lexicographic by sorted vertex list, then by
/// the canonical traversal.
bool cycle_order(const Cycle& a, const Cycle& b);

inline constexpr std::uint64_t kDefaultCycleCap = 1u << 22;

/// All distinct simple cycles of g, in canonical order. Throws CapacityError
/// once more than max_count cycles exist; never truncates silently.
std::vector<Cycle> enumerate_simple_cycles(const LGraph& g, std::uint64_t max_count,
                                           Exec exec = Exec::Auto);

/// A shortest cycle with value in a and length >= min_len, ties broken by the
/// canonical enumeration order. nullopt when no such cycle exists.
struct FoundCycle {
    std::vector<int> verts;
    Elem value;
};
std::optional<FoundCycle> find_a_cycle(const LGraph& g, const ValueSet& a, int min_len,
                                       std::uint64_t max_count = kDefaultCycleCap,
                                       Exec exec = Exec::Auto);

/// Whether g restricted to `members` (a vertex mask) has a cycle through v
/// with value in a. This is the incremental feasibility check of the
/// arboricity solver: when v joins a part, only cycles through v are new.
bool has_a_cycle_through(const LGraph& g, const std::vector<char>& members, int v,
                         const ValueSet& a);

/// Rotates/reflects a closed vertex sequence into canonical form (starts at
/// the minimum vertex, second vertex is the smaller cycle-neighbor).
std::vector<int> canonical_cycle(const std::vector<int>& verts);

/// The two arcs of a simple cycle between distinct on-cycle vertices u and v,
/// both oriented u -> v. The first arc follows the stored orientation.
std::pair<std::vector<int>, std::vector<int>> split_cycle(const std::vector<int>& cycle, int u,
                                                          int v);

}  // namespace glarb
