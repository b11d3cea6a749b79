// glarb: exact arboricity, cycle and subdivision extraction, generators and
// certificate verification for group-labelled graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition/resource
// failure, 3 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "glarb/arboricity.hpp"
#include "glarb/bounds.hpp"
#include "glarb/constructions.hpp"
#include "glarb/extract.hpp"
#include "glarb/lgraph.hpp"

namespace {

using namespace glarb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMalformed = 3;

Exec exec_mode(bool serial) { return serial ? Exec::Serial : Exec::Auto; }

void write_cert(const AnyCert& cert, const std::string& graph_path, const std::string& out) {
    CertFile f{hash_file(graph_path), cert};
    save_cert_file(f, out);
    std::cout << "wrote " << out << "\n";
}

StageData load_stage_checked(const std::string& path, const std::string& graph_path,
                             StageData::Kind kind) {
    StageData st = load_stage_file(path);
    if (st.kind != kind) throw StageError("stage", "wrong stage kind in '" + path + "'");
    if (!st.graph_hash.empty() && st.graph_hash != hash_file(graph_path))
        throw StageError("stage", "stage file was written for a different graph file");
    return st;
}

int cmd_arb(const std::string& graph_path, std::uint64_t budget, bool serial, bool oracle,
            const std::string& out) {
    Instance inst = load_instance_file(graph_path);
    if (oracle) {
        std::cout << "arb = " << arb_oracle(inst.graph, inst.a) << "\n";
        return kExitOk;
    }
    ArbResult res = arb_exact(inst.graph, inst.a, ArbBudget{budget}, exec_mode(serial));
    std::cout << "arb = " << res.value << "\n";
    std::cout << "nodes = " << res.nodes << "\n";
    std::cout << "lower bound by search exhaustion: "
              << (res.lower_exhausted ? "yes" : "no") << "\n";
    std::string path = out.empty() ? graph_path + ".arb.cert" : out;
    write_cert(res.witness, graph_path, path);
    return kExitOk;
}

int cmd_find_cycle(const std::string& graph_path, int min_len, std::uint64_t cap,
                   const std::string& out) {
    Instance inst = load_instance_file(graph_path);
    auto found = find_a_cycle(inst.graph, inst.a, min_len, cap);
    if (!found) {
        std::cout << "none\n";
        return kExitOk;
    }
    std::cout << "cycle of length " << found->verts.size() << " with value "
              << found->value.str() << "\n";
    CycleCert cert{found->verts, found->value, min_len};
    std::string path = out.empty() ? graph_path + ".cycle.cert" : out;
    write_cert(cert, graph_path, path);
    return kExitOk;
}

int cmd_extract_cycle(const std::string& graph_path, int d, const std::string& staged,
                      std::uint64_t budget, const std::string& out) {
    Instance inst = load_instance_file(graph_path);
    std::optional<StageData> stage;
    if (!staged.empty())
        stage = load_stage_checked(staged, graph_path, StageData::Kind::LongCycle);
    CycleCert cert = extract_long_a_cycle(inst.graph, inst.a, d, stage, ArbBudget{budget});
    std::cout << "cycle of length " << cert.verts.size() << " with value " << cert.value.str()
              << "\n";
    std::string path = out.empty() ? graph_path + ".cycle.cert" : out;
    write_cert(cert, graph_path, path);
    return kExitOk;
}

int cmd_extract_subdivision(const std::string& graph_path, int t, int d,
                            const std::string& staged, std::uint64_t budget,
                            const std::string& out) {
    Instance inst = load_instance_file(graph_path);
    std::optional<StageData> stage;
    if (!staged.empty())
        stage = load_stage_checked(staged, graph_path, StageData::Kind::Subdivision);
    SubdivOutcome outcome =
        extract_a_subdivision(inst.graph, inst.a, t, d, stage, ArbBudget{budget});
    if (std::holds_alternative<StageReport>(outcome)) {
        const auto& rep = std::get<StageReport>(outcome);
        std::cout << "stage report: " << rep.stage << ": " << rep.detail << "\n";
        return kExitOk;
    }
    const auto& cert = std::get<SubdivCert>(outcome);
    std::cout << "subdivision on " << cert.t() << " branching vertices, paths of length >= "
              << cert.min_len << "\n";
    std::string path = out.empty() ? graph_path + ".subdiv.cert" : out;
    write_cert(cert, graph_path, path);
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    Instance inst = load_instance_file(graph_path);
    CertFile cert = load_cert_file(cert_path, inst.graph.group());
    if (cert.graph_hash != hash_file(graph_path)) {
        std::cout << "FAIL graph-hash: certificate was issued for a different graph file\n";
        return kExitVerifyFail;
    }
    VerifyReport rep = std::visit(
        [&](const auto& c) { return verify_cert(inst.graph, inst.a, c); }, cert.cert);
    if (!rep.ok) {
        std::cout << "FAIL " << rep.rule << ": " << rep.detail << "\n";
        return kExitVerifyFail;
    }
    std::cout << "OK\n";
    return kExitOk;
}

int cmd_bounds(int omega, long t, int d, long p, long k, std::size_t max_bits) {
    std::cout << ramsey_stub_note() << "\n";
    std::cout << "g_" << omega << "(" << d << ") = " << g_long_cycle(omega, d, max_bits).get_str()
              << "\n";
    SubdivisionBounds b = subdivision_bounds(omega, Int(t), d, max_bits);
    for (size_t i = 0; i < b.r.size(); ++i)
        std::cout << "r_" << i << "(" << t << ") = " << b.r[i].get_str() << "\n";
    for (size_t i = 0; i < b.c.size(); ++i)
        std::cout << "c_" << i + 1 << "(" << t << ") = " << b.c[i].get_str() << "\n";
    std::cout << "f_" << omega << "(" << t << "," << d << ") = " << b.f.get_str() << "\n";
    if (p > 0) {
        std::cout << "mu = " << mu_const(omega).get_str() << "\n";
        std::cout << "beta = " << beta_const(omega, Int(p), max_bits).get_str() << "\n";
        std::cout << "r = " << r_const(omega, Int(p), max_bits).get_str() << "\n";
        if (k > 0)
            std::cout << "f_(" << omega << "," << p << ")(" << k << ") = "
                      << f_cycle_in_subdivision(omega, Int(p), Int(k), max_bits).get_str()
                      << "\n";
    }
    return kExitOk;
}

PlainGraph load_plain_graph(const std::string& path, std::vector<std::pair<int, int>>& marked) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::string line;
    int lineno = 0;
    PlainGraph g;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vertices:") {
            if (!(ls >> g.n) || g.n < 0) throw ParseError(lineno, "bad vertex count");
            have_n = true;
        } else {
            int u = 0, v = 0, mark = 0;
            try {
                u = std::stoi(head);
            } catch (...) {
                throw ParseError(lineno, "expected 'vertices: n' or 'u v 0|1'");
            }
            if (!(ls >> v >> mark) || (mark != 0 && mark != 1))
                throw ParseError(lineno, "expected 'u v 0|1'");
            g.edges.emplace_back(u, v);
            if (mark) marked.emplace_back(u, v);
        }
    }
    if (!have_n) throw ParseError(0, "missing 'vertices: n' line");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for group-labelled graphs"};
    app.require_subcommand(1);

    std::string graph_path, cert_path, out, staged, group_text, a_text, x_text, y_text,
        plain_path;
    std::uint64_t budget = ArbBudget{}.max_nodes;
    std::uint64_t cap = kDefaultCycleCap;
    bool serial = false;
    int min_len = 3, dd = 1, tt = 2;
    long d_override = 0;

    auto* arb = app.add_subcommand("arb", "exact arboricity with a partition witness");
    arb->add_option("graph", graph_path)->required();
    arb->add_option("--budget", budget, "search node budget");
    arb->add_flag("--serial", serial, "force the serial reference solver");
    arb->add_option("--out", out, "witness file (default <graph>.arb.cert)");

    auto* arbo = app.add_subcommand("arb-oracle", "brute-force arboricity (n <= 12)");
    arbo->add_option("graph", graph_path)->required();

    auto* fc = app.add_subcommand("find-cycle", "shortest cycle with value in A");
    fc->add_option("graph", graph_path)->required();
    fc->add_option("--min-len", min_len, "minimum cycle length")->required();
    fc->add_option("--cap", cap, "cycle enumeration cap");
    fc->add_option("--out", out, "certificate file");

    auto* ec = app.add_subcommand("extract-cycle", "long-cycle pipeline");
    ec->add_option("graph", graph_path)->required();
    ec->add_option("--d", dd, "required cycle length")->required();
    ec->add_option("--staged", staged, "stage file with chain and cycles");
    ec->add_option("--budget", budget);
    ec->add_option("--out", out);

    auto* es = app.add_subcommand("extract-subdivision", "subdivision pipeline");
    es->add_option("graph", graph_path)->required();
    es->add_option("--t", tt, "clique size")->required();
    es->add_option("--d", dd, "required path length")->required();
    es->add_option("--staged", staged, "stage file with chain, split and cycles");
    es->add_option("--budget", budget);
    es->add_option("--out", out);

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", group_text, "group descriptor, e.g. 'Z x Z/2'")->required();
        sub->add_option("--a", a_text, "value set, e.g. 'finite [(3)]'")->required();
        sub->add_option("--out", out, "output graph file")->required();
    };
    auto* g_lb = gen->add_subcommand("lower-bound",
                                     "uniform clique on (t-1)(d-1)+1 vertices; d is the unique "
                                     "qualifying length unless overridden");
    add_common(g_lb);
    g_lb->add_option("--x", x_text, "edge label")->required();
    g_lb->add_option("--t", tt, "target arboricity")->required();
    g_lb->add_option("--d", d_override, "length override (skips the uniqueness scan)");
    auto* g_l31 = gen->add_subcommand("lemma31", "uniform clique on (l-1)(t-1)+1 vertices with "
                                                 "l the smallest qualifying multiple");
    add_common(g_l31);
    g_l31->add_option("--x", x_text, "edge label")->required();
    g_l31->add_option("--t", tt, "target arboricity")->required();
    auto* g_blocks = gen->add_subcommand("blocks", "t blocks of K_t inside K_{t*t}");
    add_common(g_blocks);
    g_blocks->add_option("--y", y_text, "block label (infinite order)")->required();
    g_blocks->add_option("--t", tt, "block count and size")->required();
    auto* g_eta = gen->add_subcommand("eta", "parity encoding of a marked edge set");
    g_eta->add_option("--plain", plain_path, "file: 'vertices: n' then 'u v 0|1' lines")
        ->required();
    g_eta->add_option("--out", out, "output graph file")->required();

    auto* ver = app.add_subcommand("verify", "check a certificate against a graph file");
    ver->add_option("graph", graph_path)->required();
    ver->add_option("cert", cert_path)->required();

    int omega = 1;
    long bounds_t = 2, bounds_p = 0, bounds_k = 0;
    std::size_t max_bits = kDefaultMaxBits;
    auto* bounds = app.add_subcommand("bounds", "threshold functions as exact integers");
    bounds->add_option("--omega", omega)->required();
    bounds->add_option("--t", bounds_t)->required();
    bounds->add_option("--d", dd)->required();
    bounds->add_option("--p", bounds_p, "also print the order-two constants for this p");
    bounds->add_option("--k", bounds_k, "target cycle length for the order-two threshold");
    bounds->add_option("--max-bits", max_bits, "evaluation size guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (*arb) return cmd_arb(graph_path, budget, serial, false, out);
        if (*arbo) return cmd_arb(graph_path, budget, true, true, out);
        if (*fc) return cmd_find_cycle(graph_path, min_len, cap, out);
        if (*ec) return cmd_extract_cycle(graph_path, dd, staged, budget, out);
        if (*es) return cmd_extract_subdivision(graph_path, tt, dd, staged, budget, out);
        if (*ver) return cmd_verify(graph_path, cert_path);
        if (*bounds) return cmd_bounds(omega, bounds_t, dd, bounds_p, bounds_k, max_bits);
        if (*gen) {
            GroupPtr group;
            std::optional<ValueSet> a;
            if (!*g_eta) {
                group = GroupDesc::parse(group_text);
                a = parse_value_set(group, a_text);
            }
            if (*g_lb) {
                Elem x = Elem::parse(group, x_text);
                Int d(0);
                if (d_override > 0) {
                    d = d_override;
                } else {
                    UniqueLength ul = lower_bound_params(x, *a);
                    if (!ul.d)
                        throw PreconditionError("no certifiable unique length: " + ul.reason);
                    d = *ul.d;
                }
                Int n = (Int(tt) - 1) * (d - 1) + 1;
                if (!n.fits_sint_p()) throw ResourceError("instance with " + n.get_str() +
                                                          " vertices is not materializable");
                Instance inst{uniform_clique(group, x, static_cast<int>(n.get_si())), *a};
                save_instance_file(inst, out);
                std::cout << "wrote " << out << " (n = " << n.get_str() << ", d = "
                          << d.get_str() << ")\n";
                return kExitOk;
            }
            if (*g_l31) {
                Elem x = Elem::parse(group, x_text);
                auto l = smallest_multiple_in_a(x, *a);
                if (!l)
                    throw PreconditionError(
                        "no multiple of x beyond 2 lies in A; the block construction applies "
                        "instead");
                Int n = (*l - 1) * (Int(tt) - 1) + 1;
                if (!n.fits_sint_p()) throw ResourceError("instance with " + n.get_str() +
                                                          " vertices is not materializable");
                Instance inst{uniform_clique(group, x, static_cast<int>(n.get_si())), *a};
                save_instance_file(inst, out);
                std::cout << "wrote " << out << " (n = " << n.get_str() << ", l = "
                          << l->get_str() << ")\n";
                return kExitOk;
            }
            if (*g_blocks) {
                Elem y = Elem::parse(group, y_text);
                Instance inst{blocks_construction(group, y, tt), *a};
                save_instance_file(inst, out);
                std::cout << "wrote " << out << " (n = " << tt * tt << ")\n";
                return kExitOk;
            }
            if (*g_eta) {
                std::vector<std::pair<int, int>> marked;
                PlainGraph pg = load_plain_graph(plain_path, marked);
                Instance inst = eta_encoding(pg, marked);
                save_instance_file(inst, out);
                std::cout << "wrote " << out << "\n";
                return kExitOk;
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitMalformed;
}
