#include "glarb/lgraph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace glarb {

LGraph::LGraph(int n, GroupPtr group, std::vector<std::pair<int, int>> edges,
               std::vector<Elem> labels)
    : n_(n), group_(std::move(group)) {
    if (n < 0) throw Error("negative vertex count");
    if (edges.size() != labels.size()) throw Error("edge/label count mismatch");

    std::vector<size_t> idx(edges.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (auto& [u, v] : edges) {
        if (u == v) throw Error("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range");
    }
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return edges[a] < edges[b]; });
    edges_.reserve(edges.size());
    labels_.reserve(edges.size());
    for (size_t i : idx) {
        if (!edges_.empty() && edges_.back() == edges[i])
            throw Error("duplicate edge (" + std::to_string(edges[i].first) + "," +
                        std::to_string(edges[i].second) + ")");
        require_group(labels[i], *group_, "edge label");
        edges_.push_back(edges[i]);
        labels_.push_back(std::move(labels[i]));
    }
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> LGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

const Elem& LGraph::label(int u, int v) const {
    auto idx = edge_index(u, v);
    if (!idx) throw Error("unknown edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return labels_[*idx];
}

Elem gamma_value(const LGraph& g, std::span<const int> edge_indices) {
    Elem sum = Elem::zero(g.group());
    for (int i : edge_indices) {
        if (i < 0 || i >= g.edge_count()) throw Error("unknown edge index " + std::to_string(i));
        sum = sum + g.label_at(i);
    }
    return sum;
}

Elem path_value(const LGraph& g, std::span<const int> path) {
    Elem sum = Elem::zero(g.group());
    for (size_t i = 0; i + 1 < path.size(); ++i) sum = sum + g.label(path[i], path[i + 1]);
    return sum;
}

Elem cycle_value(const LGraph& g, std::span<const int> cycle) {
    Elem sum = path_value(g, cycle);
    if (cycle.size() >= 2) sum = sum + g.label(cycle.back(), cycle.front());
    return sum;
}

InducedSubgraph induced_subgraph(const LGraph& g, std::span<const int> vertices) {
    std::vector<int> orig(vertices.begin(), vertices.end());
    std::sort(orig.begin(), orig.end());
    orig.erase(std::unique(orig.begin(), orig.end()), orig.end());
    std::vector<int> newid(g.vertex_count(), -1);
    for (size_t i = 0; i < orig.size(); ++i) newid[orig[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (newid[u] >= 0 && newid[v] >= 0) {
            edges.emplace_back(newid[u], newid[v]);
            labels.push_back(g.label_at(e));
        }
    }
    return {LGraph(static_cast<int>(orig.size()), g.group(), std::move(edges), std::move(labels)),
            std::move(orig)};
}

ValueSet::ValueSet(Kind k, GroupPtr g, std::vector<Elem> elems, std::optional<SubgroupDesc> sub)
    : kind_(k), group_(std::move(g)), elems_(std::move(elems)), sub_(std::move(sub)) {
    for (const Elem& e : elems_) require_group(e, *group_, "value-set element");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

ValueSet ValueSet::finite(std::vector<Elem> members) {
    if (members.empty()) throw PreconditionError("value set A must be non-empty");
    GroupPtr g = members.front().group();
    return ValueSet(Kind::Finite, g, std::move(members), std::nullopt);
}

ValueSet ValueSet::cofinite(GroupPtr group, std::vector<Elem> complement) {
    ValueSet v(Kind::Cofinite, group, std::move(complement), std::nullopt);
    auto size = group->size();
    if (size && Int(static_cast<long>(v.elems_.size())) >= *size)
        throw PreconditionError("cofinite complement covers the whole group; A is empty");
    return v;
}

ValueSet ValueSet::subgroup_complement(SubgroupDesc sub) {
    GroupPtr g = sub.group();
    if (sub.is_whole_group())
        throw PreconditionError("subgroup is the whole group; A is empty");
    std::vector<Elem> gens = sub.generators();
    return ValueSet(Kind::SubgroupComplement, g, std::move(gens), std::move(sub));
}

const SubgroupDesc& ValueSet::subgroup() const {
    if (!sub_) throw Error("value set has no subgroup form");
    return *sub_;
}

bool ValueSet::contains(const Elem& e) const {
    require_group(e, *group_, "value-set membership");
    switch (kind_) {
        case Kind::Finite:
            return std::binary_search(elems_.begin(), elems_.end(), e);
        case Kind::Cofinite:
            return !std::binary_search(elems_.begin(), elems_.end(), e);
        case Kind::SubgroupComplement:
            return !sub_->contains(e);
    }
    return false;
}

int ValueSet::omega() const {
    if (kind_ != Kind::Cofinite) throw Error("omega is only defined for a cofinite value set");
    return static_cast<int>(elems_.size());
}

std::string ValueSet::str() const {
    std::string head;
    switch (kind_) {
        case Kind::Finite: head = "finite"; break;
        case Kind::Cofinite: head = "cofinite"; break;
        case Kind::SubgroupComplement: head = "co-subgroup"; break;
    }
    std::string out = head + " [";
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ";";
        out += elems_[i].str();
    }
    out += "]";
    return out;
}

LGraph quotient_relabel(const LGraph& g, const SubgroupDesc& sub) {
    return quotient_relabel(g, quotient(g.group(), sub));
}

LGraph quotient_relabel(const LGraph& g, const QuotientMap& q) {
    std::vector<Elem> labels;
    labels.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) labels.push_back(q.project(g.label_at(e)));
    return LGraph(g.vertex_count(), q.quotient(), g.edges(), std::move(labels));
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Elem> parse_elem_list(const GroupPtr& g, const std::string& body, int line) {
    std::string t = trimmed(body);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(line, "expected '[e1;e2;...]', got '" + t + "'");
    std::string inner = trimmed(t.substr(1, t.size() - 2));
    std::vector<Elem> out;
    if (inner.empty()) return out;
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ';')) out.push_back(Elem::parse(g, tok, line));
    return out;
}

}  // namespace

ValueSet parse_value_set(const GroupPtr& group, const std::string& text, int line) {
    std::string rest = trimmed(text);
    try {
        if (rest.rfind("finite", 0) == 0) {
            auto elems = parse_elem_list(group, rest.substr(6), line);
            if (elems.empty()) throw ParseError(line, "finite A must be non-empty");
            return ValueSet::finite(std::move(elems));
        }
        if (rest.rfind("cofinite", 0) == 0)
            return ValueSet::cofinite(group, parse_elem_list(group, rest.substr(8), line));
        if (rest.rfind("co-subgroup", 0) == 0) {
            auto gens = parse_elem_list(group, rest.substr(11), line);
            return ValueSet::subgroup_complement(SubgroupDesc(group, std::move(gens)));
        }
    } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
    }
    throw ParseError(line, "A must be 'finite', 'cofinite' or 'co-subgroup'");
}

Instance load_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!trimmed(line).empty()) return;
        }
        throw ParseError(lineno, std::string("unexpected end of file, expected ") + what);
    };

    next_line("'group: <descriptor>'");
    if (trimmed(line).rfind("group:", 0) != 0) throw ParseError(lineno, "expected 'group: ...'");
    GroupPtr group;
    try {
        group = GroupDesc::parse(trimmed(trimmed(line).substr(6)));
    } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
    }

    next_line("'vertices: n'");
    if (trimmed(line).rfind("vertices:", 0) != 0)
        throw ParseError(lineno, "expected 'vertices: n'");
    int n = 0;
    try {
        n = std::stoi(trimmed(trimmed(line).substr(9)));
    } catch (...) {
        throw ParseError(lineno, "bad vertex count");
    }
    if (n < 0) throw ParseError(lineno, "bad vertex count");

    next_line("'A: <form> [...]'");
    std::string aline = trimmed(line);
    if (aline.rfind("A:", 0) != 0) throw ParseError(lineno, "expected 'A: ...'");
    std::optional<ValueSet> a = parse_value_set(group, aline.substr(2), lineno);

    std::vector<std::pair<int, int>> edges;
    std::vector<Elem> labels;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty()) continue;
        std::istringstream ls(t);
        int u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'u v (label)'");
        std::string label_text;
        std::getline(ls, label_text);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "edge endpoint out of range");
        if (u == v) throw ParseError(lineno, "loops are not allowed");
        edges.emplace_back(u, v);
        labels.push_back(Elem::parse(group, label_text, lineno));
    }
    try {
        return Instance{LGraph(n, group, std::move(edges), std::move(labels)), std::move(*a)};
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    return load_instance(in);
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "group: " << inst.graph.group()->str() << "\n";
    out << "vertices: " << inst.graph.vertex_count() << "\n";
    out << "A: " << inst.a.str() << "\n";
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        auto [u, v] = inst.graph.edges()[e];
        out << u << " " << v << " " << inst.graph.label_at(e).str() << "\n";
    }
    return out.str();
}

void save_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << format_instance(inst);
}

std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

}  // namespace glarb
