#pragma once

#include <array>
#include <map>
#include <variant>

#include "glarb/certs.hpp"
#include "glarb/leveling.hpp"

namespace glarb {

/// One run of the halving construction: nested connected sets
/// X_0 ⊇ X_1 ⊇ ... ⊇ X_ell with anchors x_0..x_{ell-1} and, for every
/// u in X_j, a stored (x_{j-1},u)-path inside X_{j-1} meeting X_j only in u.
/// Any two vertices of X_ell are then joined by an X_ell-path of length at
/// least ell, reconstructed by gluing connectors.
struct SubChain {
    int ell = 0;
    std::vector<std::vector<int>> sets;  // X_0..X_ell, each sorted
    std::vector<int> anchors;            // x_0..x_{ell-1}
    // conn[j][u] is the stored (x_{j-1},u)-path, oriented x_{j-1} -> u; j in [1,ell]
    std::vector<std::map<int, std::vector<int>>> conn;

    /// An X_ell-path from x to y (distinct members of X_ell), length >= ell,
    /// internal vertices inside X_0 \ X_ell. The result is re-verified before
    /// it is returned.
    std::vector<int> x_path(const LGraph& g, int x, int y) const;
};

/// Builds a SubChain on the whole graph. Checks the hypothesis
/// arb(G) >= 2^ell and that g is connected.
SubChain nested_long_path_sets(const LGraph& g, const ValueSet& a, int ell,
                               const ArbBudget& budget = {}, Exec exec = Exec::Auto);

/// A band holding explicit per-pair paths instead of connector data; this is
/// the staged interchange form.
struct ExplicitBand {
    // key (x,y) with x < y; path stored oriented x -> y
    std::map<std::pair<int, int>, std::vector<int>> paths;
};

/// The iterated sequence S_0 ⊇ S_1 ⊇ ... ⊇ S_m. Band i spans the vertex
/// layer L_i = S_{i-1} \ S_i: for any distinct x, y in S_m it yields an
/// S_m-path of length >= ell whose internal vertices all lie in L_i.
struct NestedChain {
    int ell = 0;
    int m = 0;
    std::vector<std::vector<int>> sets;  // S_0..S_m, each sorted
    std::vector<std::variant<SubChain, ExplicitBand>> bands;  // bands[i-1] = band i

    std::vector<int> level_set(int i) const;  // L_i, 1-based band index
    /// Path through band i from x to y. Throws StageError when an explicit
    /// band has no entry for the pair.
    std::vector<int> band_path(const LGraph& g, int i, int x, int y) const;
};

/// m iterated SubChain applications. Checks arb(G) >= 2^(ell*m).
NestedChain nested_sequence(const LGraph& g, const ValueSet& a, int ell, int m,
                            const ArbBudget& budget = {}, Exec exec = Exec::Auto);

/// Structural verification of a chain against its graph: nesting,
/// connectivity of every G[S_i], connector conditions of algorithmic bands,
/// and path validity of explicit bands.
VerifyReport verify_chain(const LGraph& g, const NestedChain& chain);

/// Both endpoints in t1, z outside it: glue the two band paths x-z and y-z
/// into an (x,y)-path of length >= 2*ell through two distinct bands.
std::vector<int> link_path_via_vertex(const LGraph& g, const NestedChain& chain,
                                      const std::vector<int>& t1, int x, int y, int z,
                                      std::pair<int, int> bands);

/// Whether the subgroup misses the value set entirely (Lambda ∩ A = empty),
/// decided exactly for each value-set form.
bool subgroup_disjoint_from(const SubgroupDesc& lambda, const ValueSet& a);

struct LinkedPath {
    std::vector<int> verts;
    Elem value;
};

/// An (x,y)-path of value outside lambda and length >= 2*ell, built from four
/// band paths to two cycle vertices plus the cycle arcs. The four candidate
/// paths cannot all have value in lambda when the cycle value lies in A; if
/// they do, the inputs were inconsistent and an InternalError reports the
/// four values.
LinkedPath link_path_avoiding_subgroup(const LGraph& g, const NestedChain& chain,
                                       const std::vector<int>& t1, int x, int y,
                                       const std::vector<int>& cycle,
                                       const SubgroupDesc& lambda, const ValueSet& a,
                                       const std::array<int, 4>& bands);

/// Staged pipeline input: a chain plus the explicit intermediate objects the
/// theorem pipelines would otherwise obtain from (unreachably large)
/// arboricity thresholds.
struct StageData {
    enum class Kind { LongCycle, Subdivision };
    Kind kind = Kind::LongCycle;
    std::string graph_hash;  // optional; checked when present
    NestedChain chain;
    std::vector<std::vector<int>> cycles;
    std::vector<int> t1;           // subdivision stages only
    std::vector<int> round_sizes;  // subdivision stages only
};

std::string format_stage(const StageData& s);
StageData parse_stage(const std::string& text);
StageData load_stage_file(const std::string& path);
void save_stage_file(const StageData& s, const std::string& path);

}  // namespace glarb
