#include "glarb/certs.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace glarb {

std::vector<int> SubdivCert::path(int u, int v) const {
    bool flip = u > v;
    if (flip) std::swap(u, v);
    auto it = paths.find({u, v});
    if (it == paths.end())
        throw Error("no branching path between " + std::to_string(u) + " and " +
                    std::to_string(v));
    std::vector<int> p = it->second;
    if (flip) std::reverse(p.begin(), p.end());
    return p;
}

namespace {

std::string verts_str(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

bool path_edges_exist(const LGraph& g, const std::vector<int>& p) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

bool all_in_range(const LGraph& g, const std::vector<int>& p) {
    for (int v : p)
        if (v < 0 || v >= g.vertex_count()) return false;
    return true;
}

}  // namespace

VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const CycleCert& c) {
    if (c.verts.size() < 3)
        return VerifyReport::fail("cycle-length", "a cycle needs at least 3 vertices");
    if (!all_in_range(g, c.verts))
        return VerifyReport::fail("cycle-vertex-range", "vertex id out of range");
    std::set<int> distinct(c.verts.begin(), c.verts.end());
    if (distinct.size() != c.verts.size())
        return VerifyReport::fail("cycle-distinct", "repeated vertex in cycle");
    for (size_t i = 0; i < c.verts.size(); ++i) {
        int u = c.verts[i], v = c.verts[(i + 1) % c.verts.size()];
        if (!g.has_edge(u, v))
            return VerifyReport::fail("cycle-edge", "missing edge (" + std::to_string(u) + "," +
                                                        std::to_string(v) + ")");
    }
    if (static_cast<int>(c.verts.size()) < c.min_len)
        return VerifyReport::fail("cycle-min-length",
                                  "length " + std::to_string(c.verts.size()) +
                                      " below claimed bound " + std::to_string(c.min_len));
    Elem value = cycle_value(g, c.verts);
    if (value != c.value)
        return VerifyReport::fail("cycle-value-claim", "cycle value is " + value.str() +
                                                           ", claimed " + c.value.str());
    if (!a.contains(value))
        return VerifyReport::fail("cycle-value", "cycle value " + value.str() + " not in A");
    return VerifyReport::pass();
}

VerifyReport check_subdiv_structure(const LGraph& g, const SubdivCert& c) {
    if (c.branching.size() < 2)
        return VerifyReport::fail("subdiv-branching", "need at least 2 branching vertices");
    if (!all_in_range(g, c.branching))
        return VerifyReport::fail("subdiv-vertex-range", "branching vertex out of range");
    std::set<int> bset(c.branching.begin(), c.branching.end());
    if (bset.size() != c.branching.size())
        return VerifyReport::fail("subdiv-branching-distinct", "repeated branching vertex");

    for (const auto& [key, p] : c.paths) {
        if (key.first >= key.second || !bset.count(key.first) || !bset.count(key.second))
            return VerifyReport::fail("subdiv-path-unknown",
                                      "path key (" + std::to_string(key.first) + "," +
                                          std::to_string(key.second) +
                                          ") is not an ordered branching pair");
    }

    std::vector<int> sorted(c.branching);
    std::sort(sorted.begin(), sorted.end());
    std::set<int> internal_seen;
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (size_t j = i + 1; j < sorted.size(); ++j) {
            auto it = c.paths.find({sorted[i], sorted[j]});
            if (it == c.paths.end())
                return VerifyReport::fail("subdiv-path-missing",
                                          "no path for pair (" + std::to_string(sorted[i]) + "," +
                                              std::to_string(sorted[j]) + ")");
            const std::vector<int>& p = it->second;
            std::string pair = "(" + std::to_string(sorted[i]) + "," + std::to_string(sorted[j]) + ")";
            if (p.size() < 2 || p.front() != sorted[i] || p.back() != sorted[j])
                return VerifyReport::fail("subdiv-path-endpoints",
                                          "path for " + pair + " has wrong endpoints");
            if (!all_in_range(g, p))
                return VerifyReport::fail("subdiv-vertex-range", "path vertex out of range");
            std::set<int> pset(p.begin(), p.end());
            if (pset.size() != p.size())
                return VerifyReport::fail("subdiv-path-simple", "repeated vertex on path " + pair);
            if (!path_edges_exist(g, p))
                return VerifyReport::fail("subdiv-path-edge", "missing edge on path " + pair);
            for (size_t q = 1; q + 1 < p.size(); ++q) {
                if (bset.count(p[q]))
                    return VerifyReport::fail("subdiv-internal-branching",
                                              "path " + pair + " passes through branching vertex " +
                                                  std::to_string(p[q]));
                if (!internal_seen.insert(p[q]).second)
                    return VerifyReport::fail("subdiv-paths-disjoint",
                                              "vertex " + std::to_string(p[q]) +
                                                  " is internal to two branching paths");
            }
            if (static_cast<int>(p.size()) - 1 < c.min_len)
                return VerifyReport::fail("subdiv-path-length",
                                          "path " + pair + " has length " +
                                              std::to_string(p.size() - 1) + ", need at least " +
                                              std::to_string(c.min_len));
        }
    }
    return VerifyReport::pass();
}

VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const SubdivCert& c) {
    VerifyReport rep = check_subdiv_structure(g, c);
    if (!rep.ok) return rep;
    for (const auto& [key, p] : c.paths) {
        Elem value = path_value(g, p);
        if (!a.contains(value))
            return VerifyReport::fail("subdiv-path-value",
                                      "path (" + std::to_string(key.first) + "," +
                                          std::to_string(key.second) + ") has value " +
                                          value.str() + " not in A");
    }
    return VerifyReport::pass();
}

VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const PartitionCert& c) {
    if (static_cast<int>(c.part_of.size()) != g.vertex_count())
        return VerifyReport::fail("partition-total", "partition must assign every vertex");
    if (c.parts < 1) return VerifyReport::fail("partition-parts", "need at least one part");
    std::vector<char> used(c.parts + 1, false);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int p = c.part_of[v];
        if (p < 1 || p > c.parts)
            return VerifyReport::fail("partition-range", "vertex " + std::to_string(v) +
                                                             " has part " + std::to_string(p));
        used[p] = true;
    }
    for (int p = 1; p <= c.parts; ++p) {
        if (!used[p])
            return VerifyReport::fail("partition-contiguous",
                                      "part " + std::to_string(p) + " is empty");
    }
    for (int p = 1; p <= c.parts; ++p) {
        std::vector<int> members;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (c.part_of[v] == p) members.push_back(v);
        InducedSubgraph sub = induced_subgraph(g, members);
        auto cyc = find_a_cycle(sub.graph, a, 3);
        if (cyc) {
            std::vector<int> orig;
            for (int v : cyc->verts) orig.push_back(sub.orig_ids[v]);
            return VerifyReport::fail("partition-part-acyclic",
                                      "part " + std::to_string(p) + " induces cycle [" +
                                          verts_str(orig) + "] with value " + cyc->value.str() +
                                          " in A");
        }
    }
    return VerifyReport::pass();
}

std::string format_cert(const CertFile& c) {
    std::ostringstream out;
    if (std::holds_alternative<CycleCert>(c.cert)) {
        const auto& cc = std::get<CycleCert>(c.cert);
        out << "certificate: cycle\n";
        out << "graph-hash: " << c.graph_hash << "\n";
        out << "min-length: " << cc.min_len << "\n";
        out << "value: " << cc.value.str() << "\n";
        out << "cycle: " << verts_str(cc.verts) << "\n";
    } else if (std::holds_alternative<SubdivCert>(c.cert)) {
        const auto& sc = std::get<SubdivCert>(c.cert);
        out << "certificate: subdivision\n";
        out << "graph-hash: " << c.graph_hash << "\n";
        out << "min-length: " << sc.min_len << "\n";
        out << "branching: " << verts_str(sc.branching) << "\n";
        for (const auto& [key, p] : sc.paths)
            out << "path " << key.first << " " << key.second << ": " << verts_str(p) << "\n";
    } else {
        const auto& pc = std::get<PartitionCert>(c.cert);
        out << "certificate: partition\n";
        out << "graph-hash: " << c.graph_hash << "\n";
        out << "parts: " << pc.parts << "\n";
        out << "part-of: " << verts_str(pc.part_of) << "\n";
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

std::vector<int> parse_int_list(const std::string& s, int line) {
    std::istringstream in(s);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    std::string rest;
    if (in.fail() && in >> rest)
        throw ParseError(line, "bad integer list '" + s + "'");
    return out;
}

// "key: value" or "key arg1 arg2: value"
bool split_kv(const std::string& line, std::string& key, std::string& value) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trimmed(line.substr(0, colon));
    value = trimmed(line.substr(colon + 1));
    return true;
}

}  // namespace

CertFile parse_cert(const std::string& text, const GroupPtr& group) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string type, hash;
    std::map<std::string, std::string> fields;
    std::map<std::pair<int, int>, std::vector<int>> paths;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty()) continue;
        std::string key, value;
        if (!split_kv(t, key, value)) throw ParseError(lineno, "expected 'key: value'");
        if (key == "certificate") {
            type = value;
        } else if (key == "graph-hash") {
            hash = value;
        } else if (key.rfind("path ", 0) == 0) {
            std::istringstream ks(key.substr(5));
            int u, v;
            if (!(ks >> u >> v)) throw ParseError(lineno, "bad path key '" + key + "'");
            paths[{u, v}] = parse_int_list(value, lineno);
        } else {
            fields[key] = value;
        }
    }
    if (type.empty()) throw ParseError(0, "missing 'certificate:' line");

    auto need = [&](const std::string& k) -> const std::string& {
        auto it = fields.find(k);
        if (it == fields.end()) throw ParseError(0, "missing '" + k + ":' line");
        return it->second;
    };

    if (type == "cycle") {
        CycleCert c{parse_int_list(need("cycle"), 0), Elem::parse(group, need("value"), 0),
                    std::stoi(need("min-length"))};
        return CertFile{hash, std::move(c)};
    }
    if (type == "subdivision") {
        SubdivCert c;
        c.branching = parse_int_list(need("branching"), 0);
        c.min_len = std::stoi(need("min-length"));
        c.paths = std::move(paths);
        return CertFile{hash, std::move(c)};
    }
    if (type == "partition") {
        PartitionCert c{parse_int_list(need("part-of"), 0), std::stoi(need("parts"))};
        return CertFile{hash, std::move(c)};
    }
    throw ParseError(0, "unknown certificate type '" + type + "'");
}

CertFile load_cert_file(const std::string& path, const GroupPtr& group) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cert(ss.str(), group);
}

void save_cert_file(const CertFile& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << format_cert(c);
}

}  // namespace glarb
