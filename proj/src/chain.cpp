#include "glarb/chain.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "glarb/pathutil.hpp"

namespace glarb {

namespace {

void require_x_path(const LGraph& g, const std::vector<int>& p, int x, int y,
                    const std::vector<int>& whole, const std::vector<int>& core, int min_len) {
    auto rep = check_simple_path(g, p);
    if (!rep.ok) throw InternalError("reconstructed path invalid: " + rep.detail);
    if (p.front() != x || p.back() != y) throw InternalError("reconstructed path endpoints wrong");
    if (static_cast<int>(p.size()) - 1 < min_len)
        throw InternalError("reconstructed path shorter than " + std::to_string(min_len));
    for (size_t i = 0; i < p.size(); ++i) {
        if (!sorted_contains(whole, p[i]))
            throw InternalError("reconstructed path leaves its host set");
        if (i > 0 && i + 1 < p.size() && sorted_contains(core, p[i]))
            throw InternalError("reconstructed path hits the core internally");
    }
}

}  // namespace

std::vector<int> SubChain::x_path(const LGraph& g, int x, int y) const {
    if (x == y) throw PreconditionError("x_path endpoints must be distinct");
    const std::vector<int>& core = sets[ell];
    if (!sorted_contains(core, x) || !sorted_contains(core, y))
        throw PreconditionError("x_path endpoints must lie in the innermost set");

    std::vector<int> path;
    if (ell == 0) {
        path = bfs_path_within(g, sets[0], x, y);
    } else if (ell == 1) {
        path = shortest_in_union({conn[1].at(x), conn[1].at(y)}, x, y);
    } else {
        std::vector<std::vector<int>> pieces;
        pieces.push_back(shortest_in_union({conn[1].at(x), conn[1].at(anchors[1])}, x, anchors[1]));
        for (int j = 2; j <= ell - 1; ++j) pieces.push_back(conn[j].at(anchors[j]));
        pieces.push_back(conn[ell].at(y));
        path = path_concat(pieces);
    }
    require_x_path(g, path, x, y, sets[0], core, std::max(ell, 1));
    return path;
}

namespace {

std::vector<int> bfs_parents_within(const LGraph& g, const std::vector<int>& active, int root) {
    std::vector<char> in_active(g.vertex_count(), false);
    for (int v : active) in_active[v] = true;
    std::vector<int> parent(g.vertex_count(), -1);
    std::deque<int> queue{root};
    parent[root] = root;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (in_active[w] && parent[w] < 0) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return parent;
}

SubChain build_subchain(const LGraph& g, const std::vector<int>& active, const ValueSet& a,
                        int ell, const ArbBudget& budget) {
    SubChain sc;
    sc.ell = ell;
    sc.sets.push_back(sorted_unique(active));
    sc.conn.resize(ell + 1);
    for (int j = 0; j < ell; ++j) {
        const std::vector<int>& xj_set = sc.sets[j];
        int anchor = xj_set.front();
        Leveling lv = bfs_leveling_within(g, xj_set, anchor);
        HeavyLevel hv = heavy_level_component_within(g, xj_set, a, lv, budget);
        if (hv.level < 1)
            throw InternalError("level construction stalled at a single-level set");
        std::vector<int> parents = bfs_parents_within(g, xj_set, anchor);
        for (int u : hv.component) {
            std::vector<int> path;
            for (int v = u; v != anchor; v = parents[v]) path.push_back(v);
            path.push_back(anchor);
            std::reverse(path.begin(), path.end());
            sc.conn[j + 1][u] = std::move(path);
        }
        sc.anchors.push_back(anchor);
        sc.sets.push_back(hv.component);
    }
    return sc;
}

void require_connected(const LGraph& g, const std::vector<int>& active) {
    if (active.empty()) throw PreconditionError("empty vertex set");
    bfs_leveling_within(g, active, active.front());  // throws naming a stray vertex
}

Int pow2(int e) {
    Int b = 1;
    b <<= e;
    return b;
}

}  // namespace

SubChain nested_long_path_sets(const LGraph& g, const ValueSet& a, int ell,
                               const ArbBudget& budget, Exec exec) {
    if (ell < 0) throw PreconditionError("ell must be non-negative");
    std::vector<int> all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    require_connected(g, all);
    if (ell > 0) {
        int arb = arb_exact(g, a, budget, exec).value;
        if (ell > 30 || Int(arb) < pow2(ell))
            throw PreconditionError("needs arboricity at least " + pow2(ell).get_str() +
                                    ", graph has " + std::to_string(arb));
    }
    return build_subchain(g, all, a, ell, budget);
}

std::vector<int> NestedChain::level_set(int i) const {
    if (i < 1 || i > m) throw PreconditionError("band index out of range");
    std::vector<int> out;
    std::set_difference(sets[i - 1].begin(), sets[i - 1].end(), sets[i].begin(), sets[i].end(),
                        std::back_inserter(out));
    return out;
}

std::vector<int> NestedChain::band_path(const LGraph& g, int i, int x, int y) const {
    if (i < 1 || i > m) throw PreconditionError("band index out of range");
    if (x == y) throw PreconditionError("band path endpoints must be distinct");
    if (const SubChain* sc = std::get_if<SubChain>(&bands[i - 1])) return sc->x_path(g, x, y);
    const ExplicitBand& eb = std::get<ExplicitBand>(bands[i - 1]);
    bool flip = x > y;
    auto it = eb.paths.find(flip ? std::make_pair(y, x) : std::make_pair(x, y));
    if (it == eb.paths.end())
        throw StageError("band-path", "band " + std::to_string(i) + " has no stored path for (" +
                                          std::to_string(x) + "," + std::to_string(y) + ")");
    return flip ? path_reversed(it->second) : it->second;
}

NestedChain nested_sequence(const LGraph& g, const ValueSet& a, int ell, int m,
                            const ArbBudget& budget, Exec exec) {
    if (ell < 1 || m < 1) throw PreconditionError("ell and m must be positive");
    std::vector<int> all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    require_connected(g, all);
    int arb = arb_exact(g, a, budget, exec).value;
    if (ell * m > 30 || Int(arb) < pow2(ell * m))
        throw PreconditionError("needs arboricity at least " + pow2(ell * m).get_str() +
                                ", graph has " + std::to_string(arb));

    NestedChain ch;
    ch.ell = ell;
    ch.m = m;
    ch.sets.push_back(all);
    std::vector<int> active = all;
    for (int i = 0; i < m; ++i) {
        SubChain sub = build_subchain(g, active, a, ell, budget);
        active = sub.sets[ell];
        ch.sets.push_back(active);
        ch.bands.emplace_back(std::move(sub));
    }
    return ch;
}

namespace {

bool set_connected(const LGraph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    try {
        bfs_leveling_within(g, verts, verts.front());
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

}  // namespace

VerifyReport verify_chain(const LGraph& g, const NestedChain& chain) {
    if (chain.ell < 1 || chain.m < 1 ||
        chain.sets.size() != static_cast<size_t>(chain.m) + 1 ||
        chain.bands.size() != static_cast<size_t>(chain.m))
        return VerifyReport::fail("chain-shape", "band/set counts do not match m");
    for (const auto& s : chain.sets) {
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            return VerifyReport::fail("chain-set", "sets must be sorted and duplicate-free");
        for (int v : s)
            if (v < 0 || v >= g.vertex_count())
                return VerifyReport::fail("chain-vertex-range", "vertex out of range");
    }
    for (int i = 1; i <= chain.m; ++i) {
        if (!sorted_subset(chain.sets[i], chain.sets[i - 1]))
            return VerifyReport::fail("chain-nested",
                                      "set " + std::to_string(i) + " is not contained in set " +
                                          std::to_string(i - 1));
    }
    for (int i = 0; i <= chain.m; ++i) {
        if (!set_connected(g, chain.sets[i]))
            return VerifyReport::fail("chain-connected",
                                      "set " + std::to_string(i) + " induces a disconnected graph");
    }
    const std::vector<int>& core = chain.sets[chain.m];

    for (int i = 1; i <= chain.m; ++i) {
        std::string band = "band " + std::to_string(i);
        if (const SubChain* sc = std::get_if<SubChain>(&chain.bands[i - 1])) {
            if (sc->ell != chain.ell || sc->sets.size() != static_cast<size_t>(sc->ell) + 1 ||
                sc->anchors.size() != static_cast<size_t>(sc->ell) ||
                sc->conn.size() != static_cast<size_t>(sc->ell) + 1)
                return VerifyReport::fail("band-shape", band + ": inconsistent sizes");
            if (sc->sets.front() != chain.sets[i - 1] || sc->sets.back() != chain.sets[i])
                return VerifyReport::fail("band-endpoints",
                                          band + ": outer/inner sets do not match the chain");
            for (int j = 1; j <= sc->ell; ++j) {
                if (!sorted_subset(sc->sets[j], sc->sets[j - 1]))
                    return VerifyReport::fail("band-nested", band + ": sets not nested");
                if (!sorted_contains(sc->sets[j - 1], sc->anchors[j - 1]))
                    return VerifyReport::fail("band-anchor", band + ": anchor outside its set");
                if (sc->conn[j].size() != sc->sets[j].size())
                    return VerifyReport::fail("band-connector",
                                              band + ": connector count mismatch at level " +
                                                  std::to_string(j));
                for (int u : sc->sets[j]) {
                    auto it = sc->conn[j].find(u);
                    if (it == sc->conn[j].end())
                        return VerifyReport::fail("band-connector",
                                                  band + ": no connector for vertex " +
                                                      std::to_string(u));
                    const std::vector<int>& p = it->second;
                    auto rep = check_simple_path(g, p);
                    if (!rep.ok)
                        return VerifyReport::fail("band-connector", band + ": " + rep.detail);
                    if (p.front() != sc->anchors[j - 1] || p.back() != u)
                        return VerifyReport::fail("band-connector",
                                                  band + ": connector endpoints wrong");
                    int hits = 0;
                    for (int w : p) {
                        if (!sorted_contains(sc->sets[j - 1], w))
                            return VerifyReport::fail("band-connector",
                                                      band + ": connector leaves the outer set");
                        if (sorted_contains(sc->sets[j], w)) ++hits;
                    }
                    if (hits != 1)
                        return VerifyReport::fail(
                            "band-connector",
                            band + ": connector meets the inner set more than once");
                }
            }
        } else {
            const ExplicitBand& eb = std::get<ExplicitBand>(chain.bands[i - 1]);
            std::vector<int> level = chain.level_set(i);
            for (const auto& [key, p] : eb.paths) {
                std::string pair = "(" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + ")";
                if (key.first >= key.second)
                    return VerifyReport::fail("band-path", band + ": key " + pair + " not ordered");
                if (!sorted_contains(core, key.first) || !sorted_contains(core, key.second))
                    return VerifyReport::fail("band-path",
                                              band + ": endpoints of " + pair +
                                                  " outside the innermost set");
                auto rep = check_simple_path(g, p);
                if (!rep.ok)
                    return VerifyReport::fail("band-path", band + " " + pair + ": " + rep.detail);
                if (p.front() != key.first || p.back() != key.second)
                    return VerifyReport::fail("band-path",
                                              band + " " + pair + ": endpoints wrong");
                if (static_cast<int>(p.size()) - 1 < std::max(chain.ell, 2))
                    return VerifyReport::fail("band-path", band + " " + pair + ": shorter than " +
                                                               std::to_string(std::max(chain.ell, 2)));
                for (size_t q = 1; q + 1 < p.size(); ++q) {
                    if (!sorted_contains(level, p[q]))
                        return VerifyReport::fail("band-path",
                                                  band + " " + pair +
                                                      ": internal vertex outside the band layer");
                }
            }
        }
    }
    return VerifyReport::pass();
}

std::vector<int> link_path_via_vertex(const LGraph& g, const NestedChain& chain,
                                      const std::vector<int>& t1, int x, int y, int z,
                                      std::pair<int, int> bands) {
    if (x == y) throw PreconditionError("endpoints must be distinct");
    if (!sorted_contains(t1, x) || !sorted_contains(t1, y))
        throw PreconditionError("both endpoints must lie in the first block of the split");
    if (sorted_contains(t1, z))
        throw PreconditionError("the via-vertex must lie in the second block of the split");
    if (!sorted_contains(chain.sets[chain.m], z))
        throw PreconditionError("the via-vertex must lie in the innermost set");
    if (bands.first == bands.second) throw PreconditionError("bands must be distinct");

    std::vector<int> p1 = chain.band_path(g, bands.first, x, z);
    std::vector<int> p2 = chain.band_path(g, bands.second, y, z);
    std::vector<int> path = path_concat({p1, path_reversed(p2)});
    auto rep = check_simple_path(g, path);
    if (!rep.ok) throw InternalError("linked path invalid: " + rep.detail);
    if (static_cast<int>(path.size()) - 1 < 2 * chain.ell)
        throw InternalError("linked path shorter than twice ell");
    return path;
}

bool subgroup_disjoint_from(const SubgroupDesc& lambda, const ValueSet& a) {
    switch (a.kind()) {
        case ValueSet::Kind::Finite: {
            for (const Elem& e : a.elems())
                if (lambda.contains(e)) return false;
            return true;
        }
        case ValueSet::Kind::Cofinite: {
            auto closure = lambda.bounded_elements(a.elems().size());
            if (!closure) return false;  // subgroup larger than the complement
            for (const Elem& e : *closure)
                if (a.contains(e)) return false;
            return true;
        }
        case ValueSet::Kind::SubgroupComplement: {
            for (const Elem& e : lambda.generators())
                if (!a.subgroup().contains(e)) return false;
            return true;
        }
    }
    return false;
}

LinkedPath link_path_avoiding_subgroup(const LGraph& g, const NestedChain& chain,
                                       const std::vector<int>& t1, int x, int y,
                                       const std::vector<int>& cycle,
                                       const SubgroupDesc& lambda, const ValueSet& a,
                                       const std::array<int, 4>& bands) {
    if (x == y) throw PreconditionError("endpoints must be distinct");
    if (!sorted_contains(t1, x) || !sorted_contains(t1, y))
        throw PreconditionError("both endpoints must lie in the first block of the split");
    if (!subgroup_disjoint_from(lambda, a))
        throw PreconditionError("the subgroup intersects A");
    {
        std::set<int> bs(bands.begin(), bands.end());
        if (bs.size() != 4) throw PreconditionError("the four bands must be distinct");
        for (int b : bands)
            if (b < 1 || b > chain.m) throw PreconditionError("band index out of range");
    }
    if (cycle.size() < 3) throw PreconditionError("cycle too short");
    for (int v : cycle) {
        if (sorted_contains(t1, v) || !sorted_contains(chain.sets[chain.m], v))
            throw PreconditionError("cycle must lie in the second block of the split");
    }
    Elem cval = cycle_value(g, cycle);
    if (!a.contains(cval)) throw PreconditionError("cycle value " + cval.str() + " not in A");

    std::vector<int> sorted_cycle = cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    int u = sorted_cycle[0], v = sorted_cycle[1];
    auto [arc1, arc2] = split_cycle(cycle, u, v);

    std::vector<int> p_xu = chain.band_path(g, bands[0], x, u);
    std::vector<int> p_xv = chain.band_path(g, bands[1], x, v);
    std::vector<int> p_yu = chain.band_path(g, bands[2], y, u);
    std::vector<int> p_yv = chain.band_path(g, bands[3], y, v);

    std::vector<std::vector<int>> candidates = {
        path_concat({p_xu, path_reversed(p_yu)}),
        path_concat({p_xv, path_reversed(p_yv)}),
        path_concat({p_xu, arc1, path_reversed(p_yv)}),
        path_concat({p_xv, path_reversed(arc2), path_reversed(p_yu)}),
    };
    std::vector<Elem> values;
    for (const auto& c : candidates) values.push_back(path_value(g, c));
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (lambda.contains(values[i])) continue;
        auto rep = check_simple_path(g, candidates[i]);
        if (!rep.ok) throw InternalError("linked path invalid: " + rep.detail);
        if (static_cast<int>(candidates[i].size()) - 1 < 2 * chain.ell)
            throw InternalError("linked path shorter than twice ell");
        return LinkedPath{candidates[i], values[i]};
    }
    std::string vals;
    for (const Elem& e : values) vals += " " + e.str();
    throw InternalError(
        "all four candidate paths have value in the subgroup (" + vals +
        " ), which forces the cycle value into it as well; upstream inputs are inconsistent");
}

std::string format_stage(const StageData& s) {
    std::ostringstream out;
    out << "stage: " << (s.kind == StageData::Kind::LongCycle ? "long-cycle" : "subdivision")
        << "\n";
    if (!s.graph_hash.empty()) out << "graph-hash: " << s.graph_hash << "\n";
    out << "ell: " << s.chain.ell << "\n";
    out << "m: " << s.chain.m << "\n";
    auto put_list = [&](const std::string& key, const std::vector<int>& v) {
        out << key << ":";
        for (int x : v) out << " " << x;
        out << "\n";
    };
    for (size_t i = 0; i < s.chain.sets.size(); ++i)
        put_list("set " + std::to_string(i), s.chain.sets[i]);
    for (int i = 1; i <= s.chain.m; ++i) {
        if (const SubChain* sc = std::get_if<SubChain>(&s.chain.bands[i - 1])) {
            out << "band " << i << ": subchain\n";
            for (size_t j = 0; j < sc->sets.size(); ++j)
                put_list("bset " + std::to_string(j), sc->sets[j]);
            put_list("anchors", sc->anchors);
            for (int j = 1; j <= sc->ell; ++j)
                for (const auto& [u, p] : sc->conn[j])
                    put_list("conn " + std::to_string(j) + " " + std::to_string(u), p);
        } else {
            out << "band " << i << ": paths\n";
            const ExplicitBand& eb = std::get<ExplicitBand>(s.chain.bands[i - 1]);
            for (const auto& [key, p] : eb.paths)
                put_list("path " + std::to_string(key.first) + " " + std::to_string(key.second),
                         p);
        }
    }
    for (const auto& c : s.cycles) put_list("cycle", c);
    if (s.kind == StageData::Kind::Subdivision) {
        put_list("t1", s.t1);
        put_list("rounds", s.round_sizes);
    }
    return out.str();
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int> ints_of(const std::string& s, int line) {
    std::istringstream in(s);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw ParseError(line, "bad integer list '" + s + "'");
    return out;
}

}  // namespace

StageData parse_stage(const std::string& text) {
    StageData s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int cur_band = -1;  // 1-based band being filled, -1 = none
    bool saw_kind = false;
    std::map<int, std::vector<std::vector<int>>> bsets;
    std::map<int, std::vector<int>> banchors;
    std::map<int, std::map<int, std::map<int, std::vector<int>>>> bconns;
    std::map<int, ExplicitBand> epaths;
    std::set<int> subchain_bands, explicit_bands;
    std::map<int, std::vector<int>> chain_sets;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'key: value'");
        std::string key = trimmed(t.substr(0, colon));
        std::string value = trimmed(t.substr(colon + 1));

        if (key == "stage") {
            if (value == "long-cycle")
                s.kind = StageData::Kind::LongCycle;
            else if (value == "subdivision")
                s.kind = StageData::Kind::Subdivision;
            else
                throw ParseError(lineno, "unknown stage kind '" + value + "'");
            saw_kind = true;
        } else if (key == "graph-hash") {
            s.graph_hash = value;
        } else if (key == "ell") {
            s.chain.ell = std::stoi(value);
        } else if (key == "m") {
            s.chain.m = std::stoi(value);
        } else if (key.rfind("set ", 0) == 0) {
            chain_sets[std::stoi(key.substr(4))] = ints_of(value, lineno);
        } else if (key.rfind("band ", 0) == 0) {
            cur_band = std::stoi(key.substr(5));
            if (value == "subchain")
                subchain_bands.insert(cur_band);
            else if (value == "paths")
                explicit_bands.insert(cur_band);
            else
                throw ParseError(lineno, "band kind must be 'subchain' or 'paths'");
        } else if (key.rfind("bset ", 0) == 0) {
            if (cur_band < 0) throw ParseError(lineno, "bset outside a band");
            size_t j = std::stoul(key.substr(5));
            auto& v = bsets[cur_band];
            if (v.size() != j) throw ParseError(lineno, "bset lines out of order");
            v.push_back(ints_of(value, lineno));
        } else if (key == "anchors") {
            if (cur_band < 0) throw ParseError(lineno, "anchors outside a band");
            banchors[cur_band] = ints_of(value, lineno);
        } else if (key.rfind("conn ", 0) == 0) {
            if (cur_band < 0) throw ParseError(lineno, "conn outside a band");
            std::istringstream ks(key.substr(5));
            int j, u;
            if (!(ks >> j >> u)) throw ParseError(lineno, "bad conn key '" + key + "'");
            bconns[cur_band][j][u] = ints_of(value, lineno);
        } else if (key.rfind("path ", 0) == 0) {
            if (cur_band < 0) throw ParseError(lineno, "path outside a band");
            std::istringstream ks(key.substr(5));
            int a, b;
            if (!(ks >> a >> b)) throw ParseError(lineno, "bad path key '" + key + "'");
            epaths[cur_band].paths[{a, b}] = ints_of(value, lineno);
        } else if (key == "cycle") {
            s.cycles.push_back(ints_of(value, lineno));
        } else if (key == "t1") {
            s.t1 = ints_of(value, lineno);
        } else if (key == "rounds") {
            s.round_sizes = ints_of(value, lineno);
        } else {
            throw ParseError(lineno, "unknown stage key '" + key + "'");
        }
    }
    if (!saw_kind) throw ParseError(0, "missing 'stage:' line");
    if (s.chain.m < 1) throw ParseError(0, "missing or bad 'm:' line");
    for (int i = 0; i <= s.chain.m; ++i) {
        auto it = chain_sets.find(i);
        if (it == chain_sets.end()) throw ParseError(0, "missing 'set " + std::to_string(i) + ":'");
        s.chain.sets.push_back(it->second);
    }
    for (int i = 1; i <= s.chain.m; ++i) {
        if (subchain_bands.count(i)) {
            SubChain sc;
            sc.ell = s.chain.ell;
            sc.sets = bsets[i];
            sc.anchors = banchors[i];
            sc.conn.resize(sc.ell + 1);
            for (auto& [j, m] : bconns[i]) {
                if (j < 1 || j > sc.ell) throw ParseError(0, "conn level out of range");
                for (auto& [u, p] : m) sc.conn[j][u] = p;
            }
            s.chain.bands.emplace_back(std::move(sc));
        } else if (explicit_bands.count(i)) {
            s.chain.bands.emplace_back(std::move(epaths[i]));
        } else {
            throw ParseError(0, "missing 'band " + std::to_string(i) + ":'");
        }
    }
    std::sort(s.t1.begin(), s.t1.end());
    return s;
}

StageData load_stage_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_stage(ss.str());
}

void save_stage_file(const StageData& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << format_stage(s);
}

}  // namespace glarb
