#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "glarb/cycles.hpp"
#include "glarb/lgraph.hpp"

namespace glarb {

/// Witness for an (A,d)-cycle: the closed vertex sequence, the claimed value
/// and the claimed length bound d.
struct CycleCert {
    std::vector<int> verts;
    Elem value;
    int min_len = 3;
};

/// Witness for an (A,d)-subdivision of K_t: branching vertices plus one
/// branching path per pair, stored oriented from the smaller endpoint.
struct SubdivCert {
    std::vector<int> branching;
    std::map<std::pair<int, int>, std::vector<int>> paths;
    int min_len = 1;

    int t() const { return static_cast<int>(branching.size()); }
    /// The branching path between u and v, oriented u -> v.
    std::vector<int> path(int u, int v) const;
};

/// Witness for an arboricity upper bound: a part index in [1,k] per vertex.
struct PartitionCert {
    std::vector<int> part_of;
    int parts = 0;
};

struct VerifyReport {
    bool ok = true;
    std::string rule;
    std::string detail;

    static VerifyReport pass() { return {}; }
    static VerifyReport fail(std::string rule, std::string detail) {
        return {false, std::move(rule), std::move(detail)};
    }
};

VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const CycleCert& c);
VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const SubdivCert& c);
VerifyReport verify_cert(const LGraph& g, const ValueSet& a, const PartitionCert& c);

/// The subdivision rules that do not involve the value set: disjointness,
/// completeness, simplicity and the length bound.
VerifyReport check_subdiv_structure(const LGraph& g, const SubdivCert& c);

using AnyCert = std::variant<CycleCert, SubdivCert, PartitionCert>;

/// One certificate file: the payload plus the hash of the exact graph file it
/// certifies.
struct CertFile {
    std::string graph_hash;
    AnyCert cert;
};

std::string format_cert(const CertFile& c);
CertFile parse_cert(const std::string& text, const GroupPtr& group);
CertFile load_cert_file(const std::string& path, const GroupPtr& group);
void save_cert_file(const CertFile& c, const std::string& path);

}  // namespace glarb
