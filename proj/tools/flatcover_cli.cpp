#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatcover/baselines.hpp"
#include "flatcover/format.hpp"
#include "flatcover/kernelizer.hpp"
#include "flatcover/reductions.hpp"
#include "flatcover/solver.hpp"
#include "flatcover/structure.hpp"

using json = nlohmann::json;
using namespace flatcover;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_edge(const Edge& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
    return s + ")";
}

json cover_json(const Cover& c) {
    return json{{"count", c.edge_indices.size()}, {"indices", c.edge_indices}};
}

int cmd_check(const std::string& file, bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    ClosureResult cr = intersection_closure(h);
    const int index = cr.longest_chain;
    const int flat_d = std::max(1, index - 1);
    std::vector<Edge> chain;
    for (size_t i = 0; i < cr.closure.edges.size(); ++i) {
        if (cr.chain_len[i] == index) {
            for (int idx : cr.witness_chain(static_cast<int>(i)))
                chain.push_back(cr.closure.edges[static_cast<size_t>(idx)]);
            break;
        }
    }
    if (as_json) {
        json out{{"index", index}, {"flat-d", flat_d}, {"chain", chain}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "index=" << index << " flat-d=" << flat_d << "\n";
        std::cout << "chain:";
        for (const Edge& e : chain) std::cout << " " << format_edge(e);
        std::cout << "\n";
    }
    return kExitYes;
}

int cmd_solve(const std::string& file, int k, std::optional<int> d,
              std::optional<long long> budget, bool stats, const std::string& pick,
              bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    SolveOptions opts;
    opts.flatness_hint = d;
    opts.node_budget = budget;
    opts.pick = pick == "rare" ? VertexPick::Rare : VertexPick::Smallest;
    SolveResult r = solve(h, k, opts);
    if (as_json) {
        json out{{"decision", r.cover.has_value()}};
        if (r.cover) out["cover"] = cover_json(*r.cover);
        if (stats) {
            out["stats"] = {{"nodes", r.stats.nodes_visited}, {"depth", r.stats.max_depth}};
            if (r.stats.measure_at_root) out["stats"]["measure0"] = *r.stats.measure_at_root;
        }
        std::cout << out.dump() << "\n";
        return r.cover ? kExitYes : kExitNo;
    }
    if (stats) {
        std::cout << "c nodes=" << r.stats.nodes_visited << " depth=" << r.stats.max_depth;
        if (r.stats.measure_at_root) std::cout << " measure0=" << *r.stats.measure_at_root;
        std::cout << "\n";
    }
    if (r.cover) {
        std::cout << serialize_cover(*r.cover);
        return kExitYes;
    }
    std::cout << "s no-cover\n";
    return kExitNo;
}

int cmd_kernelize(const std::string& file, int k, int d, bool check,
                  const std::string& trace_path, bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    ReduceResult pre = reduce(h);
    KernelOptions opts;
    opts.check = check;
    KernelResult r = kernelize(pre.reduced, k, d, opts);
    for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << serialize_trace(r.trace);
    }
    if (as_json) {
        json out{{"rounds", r.rounds},
                 {"removed", pre.removed},
                 {"kernel", {{"n", r.kernel.n}, {"edges", r.kernel.edges}}}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "c rounds=" << r.rounds << "\n";
        if (!pre.removed.empty()) {
            std::cout << "c removed";
            for (Vertex v : pre.removed) std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << serialize_hg(r.kernel);
    }
    return kExitYes;
}

int cmd_oracle(const std::string& file, bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    MinCoverResult r = brute_force_min_cover(h);
    if (as_json) {
        json out{{"coverable", r.coverable}};
        if (r.coverable) {
            out["min-size"] = r.min_size;
            out["cover"] = cover_json(r.cover);
        }
        std::cout << out.dump() << "\n";
        return r.coverable ? kExitYes : kExitNo;
    }
    if (!r.coverable) {
        std::cout << "s no-cover\n";
        return kExitNo;
    }
    std::cout << "s min-cover " << r.min_size << "\n";
    for (int idx : r.cover.edge_indices) std::cout << "i " << idx << "\n";
    return kExitYes;
}

int cmd_greedy(const std::string& file, bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    Cover c = greedy_cover(h);
    if (as_json) {
        std::cout << json{{"cover", cover_json(c)}}.dump() << "\n";
    } else {
        std::cout << serialize_cover(c);
    }
    return kExitYes;
}

int cmd_gen(uint64_t seed, int n, int m, int d, const std::string& mode, bool as_json) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.m = m;
    spec.d = d;
    if (mode == "random-flat") {
        spec.mode = GenMode::RandomFlat;
    } else if (mode == "planted-cover") {
        spec.mode = GenMode::PlantedCover;
    } else if (mode == "unconstrained") {
        spec.mode = GenMode::Unconstrained;
    } else {
        throw std::runtime_error("unknown mode: " + mode);
    }
    GenResult r = gen(spec);
    if (as_json) {
        json out{{"seed", seed},
                 {"hypergraph", {{"n", r.hypergraph.n}, {"edges", r.hypergraph.edges}}}};
        if (r.planted) out["planted"] = r.planted->edge_indices;
        std::cout << out.dump() << "\n";
        return kExitYes;
    }
    std::cout << "c seed=" << seed << "\n";
    if (r.planted) {
        std::cout << "c planted";
        for (int idx : r.planted->edge_indices) std::cout << " " << idx;
        std::cout << "\n";
    }
    std::cout << serialize_hg(r.hypergraph);
    return kExitYes;
}

int cmd_verify(const std::string& file, const std::string& cert, bool as_json) {
    Hypergraph h = parse_hg(read_file(file));
    Cover c = parse_cover(read_file(cert));
    bool ok = false;
    try {
        ok = verify_cover(h, c);
    } catch (const std::invalid_argument&) {
        ok = false;
    }
    if (as_json) {
        std::cout << json{{"valid", ok}}.dump() << "\n";
    } else {
        std::cout << (ok ? "s valid\n" : "s invalid\n");
    }
    return ok ? kExitYes : kExitNo;
}

int cmd_reduce_cc(const std::string& file, bool as_json) {
    CCInstance inst = parse_cc(read_file(file));
    SetCoverReduction red = cc_to_setcover(inst);
    if (as_json) {
        json out{{"param", red.k_prime},
                 {"hypergraph", {{"n", red.hypergraph.n}, {"edges", red.hypergraph.edges}}}};
        std::cout << out.dump() << "\n";
        return kExitYes;
    }
    std::cout << "c param=" << red.k_prime << "\n" << serialize_hg(red.hypergraph);
    return kExitYes;
}

int cmd_reduce_mdm(const std::string& file, int d, int c, bool as_json) {
    MDMInstance inst = parse_mdm(read_file(file));
    if (d < 3) std::cerr << "warning: d < 3 carries no hardness claim\n";
    MDMReduction red = mdm_to_cc(inst, d, c);
    if (as_json) {
        json out{{"param", red.layout.k},
                 {"layout",
                  {{"d", d}, {"c", c}, {"padding", red.layout.padding}, {"m", red.layout.m}}},
                 {"instance",
                  {{"d", red.instance.d},
                   {"k", red.instance.k},
                   {"num-vars", red.instance.num_vars},
                   {"c1-count", red.instance.c1.size()},
                   {"c2-count", red.instance.c2.size()}}}};
        std::cout << out.dump() << "\n";
        return kExitYes;
    }
    std::cout << "c d=" << d << " c=" << c << " padding=" << red.layout.padding
              << " m=" << red.layout.m << "\n";
    std::cout << "c param=" << red.layout.k << "\n";
    std::cout << serialize_cc(red.instance);
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set Cover toolkit for semi-ladder-free hypergraphs"};
    app.require_subcommand(1);

    std::string file, cert, mode = "unconstrained", trace_path, pick = "smallest";
    std::string format = "text";
    int k = 0, d = 0, c = 1, n = 0, m = 0;
    uint64_t seed = 0;
    long long budget = 0;
    bool stats = false, check_flat = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* check_cmd = app.add_subcommand("check", "flatness report");
    check_cmd->add_option("file", file)->required();
    add_format(check_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "bounded-search-tree solver");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("-k", k, "cover size budget")->required();
    solve_cmd->add_option("-d", d, "flatness hint, enables measure stats");
    solve_cmd->add_option("--budget", budget, "node budget");
    solve_cmd->add_flag("--stats", stats);
    solve_cmd->add_option("--pick", pick)->check(CLI::IsMember({"smallest", "rare"}));
    add_format(solve_cmd);

    auto* kern_cmd = app.add_subcommand("kernelize", "grouping kernelization");
    kern_cmd->add_option("file", file)->required();
    kern_cmd->add_option("-k", k)->required();
    kern_cmd->add_option("-d", d)->required();
    kern_cmd->add_flag("--check", check_flat, "verify flatness first");
    kern_cmd->add_option("--emit-trace", trace_path, "write the grouping trace to a file");
    add_format(kern_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimum cover");
    oracle_cmd->add_option("file", file)->required();
    add_format(oracle_cmd);

    auto* greedy_cmd = app.add_subcommand("greedy", "greedy cover baseline");
    greedy_cmd->add_option("file", file)->required();
    add_format(greedy_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "deterministic instance generator");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-n", n)->required();
    gen_cmd->add_option("-m", m)->required();
    gen_cmd->add_option("-d", d);
    gen_cmd->add_option("--mode", mode);
    add_format(gen_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check a cover certificate");
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_option("--cert", cert)->required();
    add_format(verify_cmd);

    auto* rcc_cmd = app.add_subcommand("reduce-cc", "d-Constraint-Cover to Set Cover");
    rcc_cmd->add_option("file", file)->required();
    add_format(rcc_cmd);

    auto* rmdm_cmd = app.add_subcommand("reduce-mdm", "s-Dimensional Matching to d-Constraint-Cover");
    rmdm_cmd->add_option("file", file)->required();
    rmdm_cmd->add_option("-d", d)->required();
    rmdm_cmd->add_option("-c", c)->required();
    add_format(rmdm_cmd);

    CLI11_PARSE(app, argc, argv);

    const bool as_json = format == "json";
    try {
        if (check_cmd->parsed()) return cmd_check(file, as_json);
        if (solve_cmd->parsed())
            return cmd_solve(file, k, solve_cmd->count("-d") ? std::optional<int>(d) : std::nullopt,
                             budget > 0 ? std::optional<long long>(budget) : std::nullopt, stats,
                             pick, as_json);
        if (kern_cmd->parsed()) return cmd_kernelize(file, k, d, check_flat, trace_path, as_json);
        if (oracle_cmd->parsed()) return cmd_oracle(file, as_json);
        if (greedy_cmd->parsed()) return cmd_greedy(file, as_json);
        if (gen_cmd->parsed()) {
            if (d == 0) d = 1;
            return cmd_gen(seed, n, m, d, mode, as_json);
        }
        if (verify_cmd->parsed()) return cmd_verify(file, cert, as_json);
        if (rcc_cmd->parsed()) return cmd_reduce_cc(file, as_json);
        if (rmdm_cmd->parsed()) return cmd_reduce_mdm(file, d, c, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
