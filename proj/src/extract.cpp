#include "glarb/extract.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "glarb/pathutil.hpp"

namespace glarb {

EdgeColoredClique::EdgeColoredClique(std::vector<int> verts)
    : verts_(sorted_unique(std::move(verts))) {
    size_t n = verts_.size();
    colors_.assign(n * (n - 1) / 2, std::nullopt);
}

int EdgeColoredClique::pair_index(int i, int j) const {
    const int n = size();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw PreconditionError("bad pair index");
    if (i > j) std::swap(i, j);
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

const std::optional<Elem>& EdgeColoredClique::color(int i, int j) const {
    return colors_[pair_index(i, j)];
}

void EdgeColoredClique::set_color(int i, int j, std::optional<Elem> c) {
    colors_[pair_index(i, j)] = std::move(c);
}

namespace {

bool colors_match(const std::optional<Elem>& a, const std::optional<Elem>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a.has_value() || *a == *b;
}

bool extend_clique(const EdgeColoredClique& k, const std::optional<Elem>& target,
                   std::vector<int>& cur, int start, int need) {
    if (need == 0) return true;
    for (int v = start; v < k.size(); ++v) {
        if (k.size() - v < need) return false;
        bool ok = true;
        for (int u : cur) {
            if (!colors_match(k.color(u, v), target)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        cur.push_back(v);
        if (extend_clique(k, target, cur, v + 1, need - 1)) return true;
        cur.pop_back();
    }
    return false;
}

std::optional<std::vector<int>> clique_in_color(const EdgeColoredClique& k,
                                                const std::optional<Elem>& target, int size) {
    if (size < 1) throw PreconditionError("clique size must be positive");
    std::vector<int> cur;
    if (!extend_clique(k, target, cur, 0, size)) return std::nullopt;
    std::vector<int> out;
    out.reserve(cur.size());
    for (int i : cur) out.push_back(k.verts()[i]);
    return out;
}

}  // namespace

std::optional<MonoClique> mono_clique(const EdgeColoredClique& k, int t, int s) {
    if (auto c = clique_in_color(k, std::nullopt, t)) return MonoClique{*c, std::nullopt};
    std::vector<Elem> palette;
    for (int i = 0; i < k.size(); ++i)
        for (int j = i + 1; j < k.size(); ++j)
            if (k.color(i, j)) palette.push_back(*k.color(i, j));
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (const Elem& g : palette)
        if (auto c = clique_in_color(k, g, s)) return MonoClique{*c, g};
    return std::nullopt;
}

namespace {

void glue_fail(const std::string& detail) { throw StageError("glue", detail); }

struct GluePieces {
    std::vector<Elem> arc_a_val, arc_b_val;
    std::vector<Elem> q_val, r_val;
    std::vector<std::pair<int, int>> endpoints;  // (a_i, b_i)
};

GluePieces validate_glue_input(const LGraph& g, const ValueSet& a, const GlueInput& in) {
    const int count = static_cast<int>(in.splits.size());
    if (count < 2) glue_fail("need at least two split cycles");
    if (static_cast<int>(in.connect_a.size()) != count - 1 ||
        static_cast<int>(in.connect_b.size()) != count - 1)
        glue_fail("connector counts must be one less than the cycle count");

    GluePieces out;
    std::set<int> cycle_verts;
    std::set<int> internal_verts;
    auto claim_internal = [&](const std::vector<int>& p, const char* what) {
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (!internal_verts.insert(p[i]).second)
                glue_fail(std::string(what) + " shares internal vertex " + std::to_string(p[i]) +
                          " with another piece");
        }
    };

    for (int i = 0; i < count; ++i) {
        const auto& s = in.splits[i];
        for (const auto* arc : {&s.arc_a, &s.arc_b}) {
            auto rep = check_simple_path(g, *arc);
            if (!rep.ok) glue_fail("cycle " + std::to_string(i) + " arc: " + rep.detail);
        }
        if (s.arc_a.front() != s.arc_b.front() || s.arc_a.back() != s.arc_b.back())
            glue_fail("cycle " + std::to_string(i) + " arcs have different endpoints");
        int ai = s.arc_a.front(), bi = s.arc_a.back();
        if (ai == bi) glue_fail("split vertices coincide");
        std::set<int> mine(s.arc_a.begin(), s.arc_a.end());
        for (size_t j = 1; j + 1 < s.arc_b.size(); ++j)
            if (mine.count(s.arc_b[j]))
                glue_fail("cycle " + std::to_string(i) + " arcs share an internal vertex");
        mine.insert(s.arc_b.begin(), s.arc_b.end());
        for (int v : mine) {
            if (!cycle_verts.insert(v).second)
                glue_fail("cycles share vertex " + std::to_string(v));
        }
        Elem cyc_val = path_value(g, s.arc_a) + path_value(g, s.arc_b);
        if (!a.contains(cyc_val))
            glue_fail("cycle " + std::to_string(i) + " has value " + cyc_val.str() +
                      " outside A");
        out.arc_a_val.push_back(path_value(g, s.arc_a));
        out.arc_b_val.push_back(path_value(g, s.arc_b));
        out.endpoints.emplace_back(ai, bi);
        claim_internal(s.arc_a, "cycle arc");
        claim_internal(s.arc_b, "cycle arc");
    }
    for (int i = 0; i + 1 < count; ++i) {
        const auto& q = in.connect_a[i];
        const auto& r = in.connect_b[i];
        auto repq = check_simple_path(g, q);
        if (!repq.ok) glue_fail("a-connector " + std::to_string(i) + ": " + repq.detail);
        auto repr = check_simple_path(g, r);
        if (!repr.ok) glue_fail("b-connector " + std::to_string(i) + ": " + repr.detail);
        if (q.front() != out.endpoints[i].first || q.back() != out.endpoints[i + 1].first)
            glue_fail("a-connector " + std::to_string(i) + " endpoints wrong");
        if (r.front() != out.endpoints[i].second || r.back() != out.endpoints[i + 1].second)
            glue_fail("b-connector " + std::to_string(i) + " endpoints wrong");
        for (size_t j = 1; j + 1 < q.size(); ++j)
            if (cycle_verts.count(q[j]))
                glue_fail("a-connector " + std::to_string(i) + " passes through a cycle vertex");
        for (size_t j = 1; j + 1 < r.size(); ++j)
            if (cycle_verts.count(r[j]))
                glue_fail("b-connector " + std::to_string(i) + " passes through a cycle vertex");
        claim_internal(q, "a-connector");
        claim_internal(r, "b-connector");
        out.q_val.push_back(path_value(g, q));
        out.r_val.push_back(path_value(g, r));
    }
    return out;
}

}  // namespace

GluedCycle glue_pigeonhole_cycle(const LGraph& g, const ValueSet& a, const GlueInput& in) {
    GluePieces pieces = validate_glue_input(g, a, in);
    const int count = static_cast<int>(in.splits.size());

    // Candidate i (1-based) walks the first cycle's a-arc, the a-connectors up
    // to cycle i, cycle i's a-arc, and the b-connectors back.
    auto direct_cycle = [&](int i) {
        std::vector<std::vector<int>> run;
        for (int j = 0; j < i; ++j) run.push_back(in.connect_a[j]);
        run.push_back(in.splits[i].arc_a);
        for (int j = i - 1; j >= 0; --j) run.push_back(path_reversed(in.connect_b[j]));
        run.push_back(path_reversed(in.splits[0].arc_a));
        std::vector<int> verts = path_concat(run);
        verts.pop_back();  // closing duplicate
        return verts;
    };

    std::vector<Elem> hvals;
    Elem prefix = Elem::zero(g.group());
    for (int i = 1; i < count; ++i) {
        prefix = prefix + pieces.q_val[i - 1] + pieces.r_val[i - 1];
        Elem hval = pieces.arc_a_val[0] + pieces.arc_a_val[i] + prefix;
        if (a.contains(hval)) {
            std::vector<int> verts = direct_cycle(i);
            Elem check = cycle_value(g, verts);
            if (check != hval) throw InternalError("assembled cycle value mismatch");
            return GluedCycle{std::move(verts), hval, false, i};
        }
        hvals.push_back(hval);
    }

    for (int p = 0; p + 1 < static_cast<int>(hvals.size()); ++p) {
        for (int q = p + 1; q < static_cast<int>(hvals.size()); ++q) {
            if (!(hvals[p] == hvals[q])) continue;
            // swap the shared tail: the (p+1)-st cycle's other arc plus the
            // (q+1)-st cycle's a-arc and the connectors between them
            std::vector<std::vector<int>> run;
            run.push_back(in.splits[p + 1].arc_b);
            for (int j = p + 1; j <= q; ++j) run.push_back(in.connect_b[j]);
            run.push_back(path_reversed(in.splits[q + 1].arc_a));
            for (int j = q; j >= p + 1; --j) run.push_back(path_reversed(in.connect_a[j]));
            std::vector<int> verts = path_concat(run);
            verts.pop_back();
            Elem value = cycle_value(g, verts);
            Elem expect = pieces.arc_a_val[p + 1] + pieces.arc_b_val[p + 1];
            if (!(value == expect))
                throw InternalError("swapped cycle value " + value.str() +
                                    " differs from the donor cycle value " + expect.str());
            if (!a.contains(value))
                throw InternalError("swapped cycle value escaped A");
            return GluedCycle{std::move(verts), value, true, p + 1};
        }
    }
    glue_fail("all candidate values lie outside A and are pairwise distinct; the declared "
              "complement bound is violated");
    throw InternalError("unreachable");
}

namespace {

int require_cofinite(const ValueSet& a) {
    if (a.kind() != ValueSet::Kind::Cofinite)
        throw PreconditionError(
            "this pipeline needs a cofinite value set (reduce other forms first)");
    int omega = a.omega();
    if (omega < 1) throw PreconditionError("the complement must be non-empty (omega >= 1)");
    return omega;
}

// Verified, canonicalized staged cycles: simple cycles of g with value in A,
// inside `host`, pairwise disjoint. Takes the first `needed` of them.
std::vector<std::vector<int>> take_staged_cycles(const LGraph& g, const ValueSet& a,
                                                 const std::vector<std::vector<int>>& raw,
                                                 const std::vector<int>& host, int needed) {
    if (static_cast<int>(raw.size()) < needed)
        throw StageError("cycles", "need " + std::to_string(needed) +
                                       " disjoint cycles, stage provides " +
                                       std::to_string(raw.size()));
    std::vector<std::vector<int>> cycles;
    std::set<int> used;
    for (int i = 0; i < needed; ++i) {
        std::vector<int> c = canonical_cycle(raw[i]);
        std::set<int> mine(c.begin(), c.end());
        if (mine.size() != c.size()) throw StageError("cycles", "repeated vertex in a cycle");
        for (size_t j = 0; j < c.size(); ++j) {
            if (!g.has_edge(c[j], c[(j + 1) % c.size()]))
                throw StageError("cycles", "missing cycle edge");
            if (!sorted_contains(host, c[j]))
                throw StageError("cycles", "cycle vertex " + std::to_string(c[j]) +
                                               " outside the designated set");
            if (used.count(c[j]))
                throw StageError("cycles", "cycles are not vertex-disjoint at " +
                                               std::to_string(c[j]));
        }
        Elem val = cycle_value(g, c);
        if (!a.contains(val))
            throw StageError("cycles", "cycle value " + val.str() + " outside A");
        used.insert(c.begin(), c.end());
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::pair<int, int> lowest_two(const std::vector<int>& verts) {
    std::vector<int> s(verts);
    std::sort(s.begin(), s.end());
    return {s[0], s[1]};
}

}  // namespace

CycleCert extract_long_a_cycle(const LGraph& g, const ValueSet& a, int d,
                               const std::optional<StageData>& stage, const ArbBudget& budget) {
    int omega = require_cofinite(a);
    if (d < 3) throw PreconditionError("cycles have length at least 3; need d >= 3");

    StageData st;
    if (stage) {
        st = *stage;
        if (st.kind != StageData::Kind::LongCycle)
            throw StageError("stage", "expected a long-cycle stage file");
    } else {
        Int need = g_long_cycle(omega, d);
        ArbResult ar = arb_exact(g, a, budget);
        if (Int(ar.value) < need)
            throw PreconditionError("full mode needs arboricity at least " + need.get_str() +
                                    ", graph has " + std::to_string(ar.value) +
                                    "; supply a staged run instead");
        st.kind = StageData::Kind::LongCycle;
        st.chain = nested_sequence(g, a, d / 2, 2 * (omega + 1), budget);
        InducedSubgraph sub = induced_subgraph(g, st.chain.sets.back());
        for (const auto& cyc : disjoint_a_cycles(sub.graph, a, omega + 2, budget)) {
            std::vector<int> orig;
            for (int v : cyc.verts) orig.push_back(sub.orig_ids[v]);
            st.cycles.push_back(orig);
        }
    }

    VerifyReport rep = verify_chain(g, st.chain);
    if (!rep.ok) throw StageError("chain", rep.rule + ": " + rep.detail);
    if (st.chain.m < 2 * (omega + 1))
        throw StageError("chain", "need at least " + std::to_string(2 * (omega + 1)) +
                                      " bands, chain has " + std::to_string(st.chain.m));
    if (2 * st.chain.ell + 2 < d)
        throw StageError("chain", "band paths too short: need ell >= " +
                                      std::to_string((d - 1) / 2));

    std::vector<std::vector<int>> cycles =
        take_staged_cycles(g, a, st.cycles, st.chain.sets.back(), omega + 2);

    GlueInput in;
    std::vector<std::pair<int, int>> split_at;
    for (const auto& c : cycles) {
        auto [u, v] = lowest_two(c);
        auto [arc1, arc2] = split_cycle(c, u, v);
        in.splits.push_back(CycleSplit{arc1, arc2});
        split_at.emplace_back(u, v);
    }
    for (int i = 0; i + 1 < omega + 2; ++i) {
        in.connect_a.push_back(
            st.chain.band_path(g, i + 1, split_at[i].first, split_at[i + 1].first));
        in.connect_b.push_back(
            st.chain.band_path(g, i + omega + 2, split_at[i].second, split_at[i + 1].second));
    }

    GluedCycle glued = glue_pigeonhole_cycle(g, a, in);
    CycleCert cert{std::move(glued.verts), glued.value, d};
    VerifyReport check = verify_cert(g, a, cert);
    if (!check.ok)
        throw InternalError("emitted certificate failed verification: " + check.rule + ": " +
                            check.detail);
    return cert;
}

namespace {

long long choose2i(long long n) { return n * (n - 1) / 2; }

}  // namespace

SubdivCert subdivision_from_uniform(const LGraph& g, const SubdivCert& h, const ValueSet& a,
                                    int omega, int t, int d) {
    if (t < 2) throw PreconditionError("need t >= 2");
    if (omega < 1) throw PreconditionError("need omega >= 1");
    if (h.min_len < d)
        throw PreconditionError("input subdivision only claims length " +
                                std::to_string(h.min_len) + ", need " + std::to_string(d));
    VerifyReport rep = check_subdiv_structure(g, h);
    if (!rep.ok)
        throw PreconditionError("input subdivision invalid: " + rep.rule + ": " + rep.detail);

    std::vector<int> w = sorted_unique(h.branching);
    const int q = static_cast<int>(w.size());
    Elem uniform = path_value(g, h.path(w[0], w[1]));
    for (int i = 0; i < q; ++i) {
        for (int j = i + 1; j < q; ++j) {
            Elem val = path_value(g, h.path(w[i], w[j]));
            if (!(val == uniform))
                throw PreconditionError("branching paths are not value-uniform: " + val.str() +
                                        " vs " + uniform.str());
        }
    }
    if (a.contains(uniform))
        throw PreconditionError("uniform value " + uniform.str() +
                                " already lies in A; the single-path case needs no chaining");

    int p = 0;
    for (int cand = 1; cand <= omega + 1; ++cand) {
        if (a.contains(uniform.times(cand))) {
            p = cand;
            break;
        }
    }
    if (p == 0)
        throw PreconditionError("no p <= omega+1 with p*g in A: the value generates a subgroup "
                                "missing A, or omega is wrong");

    long long need = t + choose2i(t) * (p - 1);
    if (q < need)
        throw PreconditionError("need a value-uniform subdivision of K_q with q >= " +
                                std::to_string(need) + ", got q = " + std::to_string(q));

    SubdivCert out;
    out.min_len = d;
    for (int i = 0; i < t; ++i) out.branching.push_back(w[i]);
    int phi = 0;  // lexicographic pair counter
    for (int i = 1; i <= t; ++i) {
        for (int j = i + 1; j <= t; ++j) {
            int zeta = t + phi * (p - 1);  // 1-based block start (exclusive)
            std::vector<std::vector<int>> hops;
            int prev = i;
            for (int rel = 1; rel <= p - 1; ++rel) {
                hops.push_back(h.path(w[prev - 1], w[zeta + rel - 1]));
                prev = zeta + rel;
            }
            hops.push_back(h.path(w[prev - 1], w[j - 1]));
            out.paths[{w[i - 1], w[j - 1]}] = path_concat(hops);
            ++phi;
        }
    }
    VerifyReport check = verify_cert(g, a, out);
    if (!check.ok)
        throw InternalError("emitted certificate failed verification: " + check.rule + ": " +
                            check.detail);
    return out;
}

Int order_two_count(const GroupDesc& g) {
    Int count = 1;
    for (const Int& n : g.moduli()) {
        if (n % 2 == 0) count *= 2;
    }
    return count;
}

SubdivCert restrict_subdivision(const SubdivCert& f, const std::vector<int>& keep) {
    std::vector<int> k = sorted_unique(keep);
    SubdivCert out;
    out.min_len = f.min_len;
    out.branching = k;
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j) out.paths[{k[i], k[j]}] = f.path(k[i], k[j]);
    return out;
}

namespace {

// State of the subdivision driver: paths per pair keyed (u<v), oriented u->v.
using PairPaths = std::map<std::pair<int, int>, std::vector<int>>;

std::vector<int> pair_path(const PairPaths& m, int u, int v) {
    bool flip = u > v;
    if (flip) std::swap(u, v);
    auto it = m.find({u, v});
    if (it == m.end())
        throw InternalError("missing stored path for pair (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    return flip ? path_reversed(it->second) : it->second;
}

SubdivCert cert_from_pairs(const std::vector<int>& branching, const PairPaths& paths, int d) {
    SubdivCert out;
    out.min_len = d;
    out.branching = branching;
    for (size_t i = 0; i < branching.size(); ++i)
        for (size_t j = i + 1; j < branching.size(); ++j) {
            int u = branching[i], v = branching[j];
            out.paths[{u, v}] = pair_path(paths, u, v);
        }
    return out;
}

struct ResourceCursor {
    int next_cycle = 0;
    int next_band = 0;  // consumed bands (1-based allocation)
};

}  // namespace

SubdivOutcome extract_a_subdivision(const LGraph& g, const ValueSet& a, int t, int d,
                                    const std::optional<StageData>& stage,
                                    const ArbBudget& budget) {
    int omega = require_cofinite(a);
    if (t < 2) throw PreconditionError("need t >= 2");
    if (d < 1) throw PreconditionError("need d >= 1");

    StageData st;
    if (stage) {
        st = *stage;
        if (st.kind != StageData::Kind::Subdivision)
            throw StageError("stage", "expected a subdivision stage file");
    } else {
        SubdivisionBounds bounds = subdivision_bounds(omega, t, d);
        ArbResult ar = arb_exact(g, a, budget);
        if (Int(ar.value) < bounds.f)
            throw PreconditionError("full mode needs arboricity at least " + bounds.f.get_str() +
                                    ", graph has " + std::to_string(ar.value) +
                                    "; supply a staged run instead");
        // Unreachable at desk scale: the chain alone would need 4*c bands.
        Int m_needed = 4 * bounds.c[omega];
        if (m_needed > 1000000)
            throw ResourceError("full-mode chain with " + m_needed.get_str() +
                                " bands is not materializable; use a staged run");
        st.kind = StageData::Kind::Subdivision;
        st.chain = nested_sequence(g, a, (d + 1) / 2, static_cast<int>(m_needed.get_si()),
                                   budget);
        const auto& sm = st.chain.sets.back();
        size_t r0 = bounds.r[0].get_ui();
        st.t1.assign(sm.begin(), sm.begin() + r0);
        std::vector<int> t2(sm.begin() + r0, sm.end());
        InducedSubgraph sub = induced_subgraph(g, t2);
        Int cw = bounds.c[omega];
        for (const auto& cyc : disjoint_a_cycles(sub.graph, a, static_cast<int>(cw.get_si()),
                                                 budget)) {
            std::vector<int> orig;
            for (int v : cyc.verts) orig.push_back(sub.orig_ids[v]);
            st.cycles.push_back(orig);
        }
        for (int i = 0; i <= omega; ++i)
            st.round_sizes.push_back(static_cast<int>(bounds.r[i + 1].get_si()));
    }

    VerifyReport rep = verify_chain(g, st.chain);
    if (!rep.ok) throw StageError("chain", rep.rule + ": " + rep.detail);
    if (2 * st.chain.ell < d)
        throw StageError("chain", "band paths too short: need ell >= " +
                                      std::to_string((d + 1) / 2));
    const std::vector<int>& sm = st.chain.sets.back();
    std::vector<int> t1 = sorted_unique(st.t1);
    if (t1.empty()) throw StageError("t1", "empty branching candidate set");
    if (!sorted_subset(t1, sm))
        throw StageError("t1", "branching candidates must lie in the innermost set");
    std::vector<int> t2;
    std::set_difference(sm.begin(), sm.end(), t1.begin(), t1.end(), std::back_inserter(t2));
    std::vector<std::vector<int>> cycles =
        take_staged_cycles(g, a, st.cycles, t2, static_cast<int>(st.cycles.size()));

    ResourceCursor cur;
    auto next_cycle = [&]() -> const std::vector<int>& {
        if (cur.next_cycle >= static_cast<int>(cycles.size()))
            throw StageError("cycles", "ran out of staged disjoint cycles after " +
                                           std::to_string(cur.next_cycle));
        return cycles[cur.next_cycle++];
    };
    auto next_bands = [&]() -> std::array<int, 4> {
        if (cur.next_band + 4 > st.chain.m)
            throw StageError("bands", "ran out of chain bands after " +
                                          std::to_string(cur.next_band));
        std::array<int, 4> out{cur.next_band + 1, cur.next_band + 2, cur.next_band + 3,
                               cur.next_band + 4};
        cur.next_band += 4;
        return out;
    };

    std::vector<int> b = t1;  // current branching candidates
    PairPaths j_paths;
    std::vector<Elem> a_list;
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> f_paths;  // aligned with a_list

    // Round 0: pairwise linked paths through a private cycle vertex, two
    // bands out of each block of four.
    for (size_t i = 0; i < b.size(); ++i) {
        for (size_t j = i + 1; j < b.size(); ++j) {
            const std::vector<int>& c = next_cycle();
            std::array<int, 4> bands = next_bands();
            int z = *std::min_element(c.begin(), c.end());
            j_paths[{b[i], b[j]}] = link_path_via_vertex(g, st.chain, t1, b[i], b[j], z,
                                                         {bands[0], bands[1]});
        }
    }

    for (int round = 0;; ++round) {
        EdgeColoredClique clique(b);
        for (size_t i = 0; i < b.size(); ++i) {
            for (size_t j = i + 1; j < b.size(); ++j) {
                Elem val = path_value(g, pair_path(j_paths, b[i], b[j]));
                clique.set_color(static_cast<int>(i), static_cast<int>(j),
                                 a.contains(val) ? std::nullopt : std::make_optional(val));
            }
        }
        if (round >= static_cast<int>(st.round_sizes.size()))
            return StageReport{"rounds",
                               "no staged target size for round " + std::to_string(round)};
        int s_target = st.round_sizes[round];
        auto mono = mono_clique(clique, t, s_target);
        if (!mono)
            return StageReport{"mono-clique",
                               "round " + std::to_string(round) +
                                   ": no monochromatic clique at target sizes (" +
                                   std::to_string(t) + ", " + std::to_string(s_target) + ")"};

        if (!mono->color) {
            SubdivCert cert = cert_from_pairs(mono->verts, j_paths, d);
            VerifyReport check = verify_cert(g, a, cert);
            if (!check.ok)
                throw InternalError("emitted certificate failed verification: " + check.rule +
                                    ": " + check.detail);
            return cert;
        }

        Elem color = *mono->color;
        b = mono->verts;

        SubgroupDesc color_span(g.group(), {color});
        if (!subgroup_disjoint_from(color_span, a)) {
            // Uniform-value shortcut: chain p of these paths per target pair.
            int p = 0;
            for (int cand = 1; cand <= omega + 1; ++cand) {
                if (a.contains(color.times(cand))) {
                    p = cand;
                    break;
                }
            }
            if (p == 0)
                throw InternalError("value generates into A but no multiple within omega+1 hits");
            long long need = t + choose2i(t) * (p - 1);
            if (static_cast<long long>(b.size()) < need)
                return StageReport{"uniform-subdivision",
                                   "the uniform clique has " + std::to_string(b.size()) +
                                       " branching vertices, chaining needs " +
                                       std::to_string(need)};
            SubdivCert uniform_cert = cert_from_pairs(b, j_paths, d);
            return subdivision_from_uniform(g, uniform_cert, a, omega, t, d);
        }

        std::vector<Elem> extended = a_list;
        extended.push_back(color);
        SubgroupDesc lambda_ext(g.group(), extended);

        if (subgroup_disjoint_from(lambda_ext, a)) {
            // Grow: keep one path per accumulated value for every pair, then
            // link a fresh family avoiding the enlarged subgroup.
            if (static_cast<int>(extended.size()) > omega)
                throw InternalError("accumulated more distinct non-A values than omega");
            a_list = extended;
            std::map<std::pair<int, int>, std::vector<std::vector<int>>> kept;
            for (size_t i = 0; i < b.size(); ++i) {
                for (size_t j = i + 1; j < b.size(); ++j) {
                    auto key = std::make_pair(b[i], b[j]);
                    std::vector<std::vector<int>> bundle;
                    if (a_list.size() > 1) bundle = f_paths.at(key);
                    bundle.push_back(pair_path(j_paths, b[i], b[j]));
                    kept[key] = std::move(bundle);
                }
            }
            f_paths = std::move(kept);

            j_paths.clear();
            for (size_t i = 0; i < b.size(); ++i) {
                for (size_t j = i + 1; j < b.size(); ++j) {
                    const std::vector<int>& c = next_cycle();
                    std::array<int, 4> bands = next_bands();
                    LinkedPath lp = link_path_avoiding_subgroup(g, st.chain, t1, b[i], b[j], c,
                                                                lambda_ext, a, bands);
                    j_paths[{b[i], b[j]}] = std::move(lp.verts);
                }
            }
            continue;
        }

        // Final assembly: the enlarged subgroup meets A. Represent a target
        // value as a non-negative combination and realize it as relay routes.
        a_list = extended;
        for (size_t i = 0; i < b.size(); ++i) {
            for (size_t j = i + 1; j < b.size(); ++j) {
                auto key = std::make_pair(b[i], b[j]);
                std::vector<std::vector<int>> bundle;
                if (a_list.size() > 1) bundle = f_paths.at(key);
                bundle.push_back(pair_path(j_paths, b[i], b[j]));
                f_paths[key] = std::move(bundle);
            }
        }
        for (auto it = f_paths.begin(); it != f_paths.end();) {
            if (!sorted_contains(b, it->first.first) || !sorted_contains(b, it->first.second))
                it = f_paths.erase(it);
            else
                ++it;
        }

        std::vector<Int> orders;
        for (const Elem& e : a_list) {
            auto ord = e.order();
            if (!ord)
                throw InternalError("an accumulated value has infinite order, which would force "
                                    "its span to meet A");
            orders.push_back(*ord);
        }
        // Exponent vector whose combination lands in A, with the smallest
        // total first (it is the relay budget), ties broken lexicographically.
        std::vector<Int> cursor(a_list.size(), 0);
        std::optional<std::vector<Int>> expo;
        std::optional<Elem> target;
        Int best_total = 0;
        while (true) {
            Int total = 0;
            for (const Int& e : cursor) total += e;
            if (total != 0 && (!expo || total < best_total)) {
                Elem s = Elem::zero(g.group());
                for (size_t i = 0; i < a_list.size(); ++i) s = s + a_list[i].times(cursor[i]);
                if (a.contains(s)) {
                    expo = cursor;
                    best_total = total;
                    target = s;
                }
            }
            int pos = static_cast<int>(cursor.size()) - 1;
            while (pos >= 0) {
                cursor[pos] += 1;
                if (cursor[pos] < orders[pos]) break;
                cursor[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        if (!target)
            throw InternalError("the enlarged span meets A but no bounded combination does");

        long long lam = best_total.get_si();
        long long need = t + choose2i(t) * (lam - 1);
        if (static_cast<long long>(b.size()) < need)
            return StageReport{"relay-budget",
                               "route realization needs " + std::to_string(need) +
                                   " branching vertices, the clique has " +
                                   std::to_string(b.size())};

        std::vector<int> hop_values;  // index into a_list per hop
        for (size_t i = 0; i < expo->size(); ++i)
            for (Int c = 0; c < (*expo)[i]; ++c) hop_values.push_back(static_cast<int>(i));

        PairPaths routes;
        std::vector<int> branching(b.begin(), b.begin() + t);
        int theta = 0;
        for (int i = 1; i <= t; ++i) {
            for (int j = i + 1; j <= t; ++j) {
                int zeta = t + theta * (lam - 1);  // 1-based relay block start (exclusive)
                std::vector<int> stops{b[i - 1]};
                for (int rel = 1; rel <= lam - 1; ++rel) stops.push_back(b[zeta + rel - 1]);
                stops.push_back(b[j - 1]);
                std::vector<std::vector<int>> hops;
                for (size_t h = 0; h + 1 < stops.size(); ++h) {
                    int u = stops[h], v = stops[h + 1];
                    const auto& bundle =
                        f_paths.at({std::min(u, v), std::max(u, v)});
                    std::vector<int> hop = bundle[hop_values[h]];
                    if (u > v) hop = path_reversed(hop);
                    hops.push_back(std::move(hop));
                }
                routes[{std::min(b[i - 1], b[j - 1]), std::max(b[i - 1], b[j - 1])}] =
                    b[i - 1] < b[j - 1] ? path_concat(hops)
                                        : path_reversed(path_concat(hops));
                ++theta;
            }
        }
        SubdivCert cert = cert_from_pairs(branching, routes, d);
        VerifyReport check = verify_cert(g, a, cert);
        if (!check.ok)
            throw InternalError("emitted certificate failed verification: " + check.rule + ": " +
                                check.detail);
        return cert;
    }
}

namespace {

// An A-valued cycle inside a value-uniform-candidate sub-subdivision, found
// along the constructive route: probe the doubled-value identity cycles, then
// refine monochromatically twice, then take a ring through however many
// branching vertices makes the uniform value sum land in A.
std::variant<std::vector<int>, StageReport> a_cycle_in_subdivision(const LGraph& g,
                                                                   const SubdivCert& h,
                                                                   const ValueSet& a, int beta,
                                                                   int mu) {
    const std::vector<int> w = sorted_unique(h.branching);
    const int rh = static_cast<int>(w.size());
    if (rh < 4)
        return StageReport{"identity-probe",
                           "sub-subdivision has " + std::to_string(rh) +
                               " branching vertices; the doubled-value identity needs 4"};

    auto ring = [&](const std::vector<int>& stops) {
        std::vector<std::vector<int>> hops;
        for (size_t i = 0; i < stops.size(); ++i)
            hops.push_back(h.path(stops[i], stops[(i + 1) % stops.size()]));
        std::vector<int> verts = path_concat(hops);
        verts.pop_back();
        return verts;
    };

    EdgeColoredClique doubled(w);
    for (int i = 0; i < rh; ++i) {
        for (int j = i + 1; j < rh; ++j) {
            int x = -1, y = -1;
            for (int c = 0; c < rh && y < 0; ++c) {
                if (c == i || c == j) continue;
                (x < 0 ? x : y) = c;
            }
            std::vector<int> tri1 = ring({w[i], w[j], w[x]});
            std::vector<int> tri2 = ring({w[i], w[j], w[y]});
            std::vector<int> quad = ring({w[y], w[i], w[x], w[j]});
            for (const auto& cand : {tri1, tri2, quad}) {
                Elem val = cycle_value(g, cand);
                if (a.contains(val)) return cand;
            }
            // gamma(tri1) + gamma(tri2) - gamma(quad) collapses to twice the
            // (i,j) path value; used as the refinement color
            Elem doubled_val =
                cycle_value(g, tri1) + cycle_value(g, tri2) - cycle_value(g, quad);
            Elem direct = path_value(g, h.path(w[i], w[j]));
            if (!(doubled_val == direct + direct))
                throw InternalError("doubled-value identity failed on actual path values");
            doubled.set_color(i, j, doubled_val);
        }
    }

    auto first = mono_clique(doubled, /*t=*/rh + 1, beta);  // the in-A class cannot win here
    if (!first || !first->color)
        return StageReport{"ramsey-doubled",
                           "no monochromatic clique of size " + std::to_string(beta) +
                               " under doubled path values"};
    SubdivCert h1 = restrict_subdivision(h, first->verts);

    const std::vector<int>& w1 = h1.branching;
    Elem base = path_value(g, h1.path(w1[0], w1[1]));
    EdgeColoredClique shifted(w1);
    for (size_t i = 0; i < w1.size(); ++i) {
        for (size_t j = i + 1; j < w1.size(); ++j) {
            Elem diff = path_value(g, h1.path(w1[i], w1[j])) - base;
            if (!(diff + diff).is_zero())
                throw InternalError("value shift is not of order at most 2 inside a "
                                    "doubled-value-monochromatic clique");
            shifted.set_color(static_cast<int>(i), static_cast<int>(j), diff);
        }
    }
    auto second = mono_clique(shifted, static_cast<int>(w1.size()) + 1, mu);
    if (!second || !second->color)
        return StageReport{"ramsey-shift",
                           "no monochromatic clique of size " + std::to_string(mu) +
                               " under order-two value shifts"};
    SubdivCert h2 = restrict_subdivision(h1, second->verts);

    const std::vector<int>& z = h2.branching;
    Elem uniform = path_value(g, h2.path(z[0], z[1]));
    if (!a.contains(uniform))
        throw InternalError("branching path value escaped A in a verified subdivision");
    for (int c = 3; c <= static_cast<int>(z.size()); ++c) {
        if (a.contains(uniform.times(c))) {
            std::vector<int> stops(z.begin(), z.begin() + c);
            return ring(stops);
        }
    }
    return StageReport{"ring-multiple",
                       "no ring through 3.." + std::to_string(z.size()) +
                           " branching vertices has value in A at the staged clique size"};
}

}  // namespace

CycleOutcome long_cycle_in_subdivision(const LGraph& g, const SubdivCert& f, const ValueSet& a,
                                       const Int& p_bound, int k, const CycleSearchSizes& sizes) {
    int omega = require_cofinite(a);
    if (k < 3) throw PreconditionError("cycles have length at least 3; need k >= 3");
    if (sizes.r_sub < 1 || sizes.beta < 2 || sizes.mu < 2)
        throw PreconditionError("staged sizes must be positive");

    VerifyReport frep = verify_cert(g, a, f);
    if (!frep.ok)
        throw PreconditionError("input subdivision does not verify: " + frep.rule + ": " +
                                frep.detail);
    Int two_count = order_two_count(*g.group());
    if (two_count > p_bound)
        throw PreconditionError("the group has " + two_count.get_str() +
                                " elements of order at most 2, above the declared bound " +
                                p_bound.get_str());

    const std::vector<int> u = sorted_unique(f.branching);
    long long needed = static_cast<long long>(sizes.r_sub + k) * (omega + 2);
    if (static_cast<long long>(u.size()) < needed)
        throw StageError("split", "need " + std::to_string(needed) +
                                      " branching vertices, the subdivision has " +
                                      std::to_string(u.size()));

    const int r = sizes.r_sub;
    std::vector<std::vector<int>> cycles;
    std::vector<SubdivCert> subs;
    for (int i = 0; i < omega + 2; ++i) {
        std::vector<int> mine(u.begin() + static_cast<size_t>(i) * r,
                              u.begin() + static_cast<size_t>(i + 1) * r);
        subs.push_back(restrict_subdivision(f, mine));
        auto found = a_cycle_in_subdivision(g, subs.back(), a, sizes.beta, sizes.mu);
        if (std::holds_alternative<StageReport>(found)) {
            StageReport repr = std::get<StageReport>(found);
            repr.detail = "sub-subdivision " + std::to_string(i) + ": " + repr.detail;
            return repr;
        }
        cycles.push_back(std::get<std::vector<int>>(found));
    }

    const int ell = k / 2;
    GlueInput in;
    std::vector<std::pair<int, int>> split_at;
    for (int i = 0; i < omega + 2; ++i) {
        std::vector<int> on_cycle;
        for (int v : cycles[i])
            if (sorted_contains(subs[i].branching, v)) on_cycle.push_back(v);
        if (on_cycle.size() < 2)
            throw InternalError("cycle passes through fewer than two branching vertices");
        auto [ai, bi] = lowest_two(on_cycle);
        auto [arc1, arc2] = split_cycle(canonical_cycle(cycles[i]), ai, bi);
        in.splits.push_back(CycleSplit{arc1, arc2});
        split_at.emplace_back(ai, bi);
    }
    for (int i = 0; i + 1 < omega + 2; ++i) {
        // relay block i: k reserved branching vertices after the r(omega+2) prefix
        size_t base = static_cast<size_t>(r) * (omega + 2) + static_cast<size_t>(i) * k;
        auto route = [&](int from, int to, int offset) {
            std::vector<int> stops{from};
            for (int rel = 0; rel < ell - 1; ++rel)
                stops.push_back(u[base + offset + rel]);
            stops.push_back(to);
            std::vector<std::vector<int>> hops;
            for (size_t h = 0; h + 1 < stops.size(); ++h)
                hops.push_back(f.path(stops[h], stops[h + 1]));
            return path_concat(hops);
        };
        in.connect_a.push_back(route(split_at[i].first, split_at[i + 1].first, 0));
        in.connect_b.push_back(route(split_at[i].second, split_at[i + 1].second, ell - 1));
    }

    GluedCycle glued = glue_pigeonhole_cycle(g, a, in);
    if (static_cast<int>(glued.verts.size()) < k)
        throw InternalError("glued cycle shorter than k");
    CycleCert cert{std::move(glued.verts), glued.value, k};
    VerifyReport check = verify_cert(g, a, cert);
    if (!check.ok)
        throw InternalError("emitted certificate failed verification: " + check.rule + ": " +
                            check.detail);
    return cert;
}

}  // namespace glarb
