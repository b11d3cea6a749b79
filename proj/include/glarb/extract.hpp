#pragma once

#include <optional>

#include "glarb/bounds.hpp"
#include "glarb/chain.hpp"

namespace glarb {

/// A complete graph on abstract vertices with one color per pair; nullopt is
/// the distinguished "value in A" color, every other color is a group element
/// outside A.
class EdgeColoredClique {
public:
    explicit EdgeColoredClique(std::vector<int> verts);

    int size() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& verts() const { return verts_; }
    const std::optional<Elem>& color(int i, int j) const;
    void set_color(int i, int j, std::optional<Elem> c);

private:
    int pair_index(int i, int j) const;
    std::vector<int> verts_;
    std::vector<std::optional<Elem>> colors_;
};

struct MonoClique {
    std::vector<int> verts;        // in host-vertex ids, ascending
    std::optional<Elem> color;     // nullopt = the "value in A" class
};

/// First looks for a size-t clique whose pairs all carry the "in A" color,
/// then, per non-A color in deterministic element order, for a size-s clique
/// in that single color. nullopt when neither exists (a legitimate outcome at
/// desk scale; the guarantees only hold above Ramsey-sized inputs).
std::optional<MonoClique> mono_clique(const EdgeColoredClique& k, int t, int s);

/// One cycle split into two arcs at the chosen pair of vertices; both arcs
/// run from the split vertex a_i to b_i.
struct CycleSplit {
    std::vector<int> arc_a;
    std::vector<int> arc_b;
};

/// The pigeonhole gluing input: omega+2 split cycles, with connector paths
/// joining consecutive a-vertices (connect_a[i]: a_i -> a_{i+1}) and
/// consecutive b-vertices (connect_b[i]: b_i -> b_{i+1}).
struct GlueInput {
    std::vector<CycleSplit> splits;
    std::vector<std::vector<int>> connect_a;
    std::vector<std::vector<int>> connect_b;
};

struct GluedCycle {
    std::vector<int> verts;
    Elem value;
    bool collision = false;  // false: some candidate had value in A directly
    int index = 0;           // which candidate / collision partner
};

/// Either some candidate cycle H_i already has value in A (returned as-is),
/// or two candidates share a value outside A and the swapped cycle, whose
/// value equals the (a+1)-st input cycle's value, is returned. Structural
/// violations and a failed pigeonhole raise StageError.
GluedCycle glue_pigeonhole_cycle(const LGraph& g, const ValueSet& a, const GlueInput& in);

/// Long-cycle pipeline. Without a stage the arboricity threshold
/// g = (omega+2)2^(d(omega+1)+1) is enforced (out of reach at desk scale and
/// reported as a precondition error with the exact bound); with a stage the
/// supplied chain and disjoint cycles are verified structurally and the proof
/// steps run on them.
CycleCert extract_long_a_cycle(const LGraph& g, const ValueSet& a, int d,
                               const std::optional<StageData>& stage,
                               const ArbBudget& budget = {});

/// Turns a value-uniform subdivision (every branching path has value
/// uniform_g outside A, length >= d) into an (A,d)-subdivision of K_t by
/// chaining p branching paths per pair through disjoint relay blocks, where p
/// is minimal with p * uniform_g in A (p <= omega+1).
SubdivCert subdivision_from_uniform(const LGraph& g, const SubdivCert& h, const ValueSet& a,
                                    int omega, int t, int d);

/// A named stop: the step whose search legitimately found nothing at desk
/// scale (mono_clique misses, staged resources exhausted).
struct StageReport {
    std::string stage;
    std::string detail;
};

using SubdivOutcome = std::variant<SubdivCert, StageReport>;

/// Subdivision pipeline: build the pairwise-linked subdivision from the
/// chain, reduce it monochromatically, take the uniform-value shortcut when
/// the color generates into A, otherwise grow the parallel-path structure
/// with paths avoiding the generated subgroup until some subgroup extension
/// meets A, then realize the target value as a relay route sum.
SubdivOutcome extract_a_subdivision(const LGraph& g, const ValueSet& a, int t, int d,
                                    const std::optional<StageData>& stage,
                                    const ArbBudget& budget = {});

struct CycleSearchSizes {
    int r_sub = 0;  // branching count of each of the omega+2 sub-subdivisions
    int beta = 0;   // first Ramsey refinement target
    int mu = 0;     // second Ramsey refinement target
};

using CycleOutcome = std::variant<CycleCert, StageReport>;

/// Long cycles inside value-in-A subdivisions: split off omega+2 disjoint
/// sub-subdivisions, find an A-cycle in each via the doubled-value identity
/// and two monochromatic refinements, then glue exactly like the long-cycle
/// pipeline, with relay routes through reserved branching vertices.
CycleOutcome long_cycle_in_subdivision(const LGraph& g, const SubdivCert& f, const ValueSet& a,
                                       const Int& p_bound, int k, const CycleSearchSizes& sizes);

/// Count of elements of order at most 2 (always finite for these groups).
Int order_two_count(const GroupDesc& g);

/// Restriction of a subdivision to a subset of its branching vertices.
SubdivCert restrict_subdivision(const SubdivCert& f, const std::vector<int>& keep);

}  // namespace glarb
