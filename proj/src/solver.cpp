#include "flatcover/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flatcover/structure.hpp"

namespace flatcover {

namespace {

struct SearchCtx {
    const Hypergraph& h;
    int k;
    const SolveOptions& opts;
    SearchStats& stats;
    std::map<Edge, int> chain_len;  // closure edge -> l_{H'}(e), when instrumented
    std::vector<int> degree;        // per-vertex edge count, for the rare pick

    int slot_level(const Edge& e) const {
        auto it = chain_len.find(e);
        return it == chain_len.end() ? 0 : it->second;
    }
};

Cover cover_from_slots(const SearchCtx& ctx, const std::vector<Edge>& slots) {
    std::set<int> picked;
    for (const Edge& slot : slots) {
        for (size_t j = 0; j < ctx.h.edges.size(); ++j) {
            if (edge_subset(slot, ctx.h.edges[j])) {
                picked.insert(static_cast<int>(j) + 1);
                break;
            }
        }
    }
    Cover c;
    c.edge_indices.assign(picked.begin(), picked.end());
    return c;
}

Vertex pick_uncovered(const SearchCtx& ctx, const std::vector<bool>& covered) {
    if (ctx.opts.pick == VertexPick::Rare) {
        Vertex best = 0;
        for (Vertex v = 1; v <= ctx.h.n; ++v) {
            if (covered[static_cast<size_t>(v)]) continue;
            if (best == 0 || ctx.degree[static_cast<size_t>(v)] < ctx.degree[static_cast<size_t>(best)])
                best = v;
        }
        return best;
    }
    for (Vertex v = 1; v <= ctx.h.n; ++v)
        if (!covered[static_cast<size_t>(v)]) return v;
    return 0;
}

std::optional<Cover> solve_rec(SearchCtx& ctx, std::vector<Edge>& slots, int depth) {
    ++ctx.stats.nodes_visited;
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);
    if (ctx.opts.node_budget && ctx.stats.nodes_visited > *ctx.opts.node_budget)
        throw BudgetExceeded();

    std::vector<bool> covered(static_cast<size_t>(ctx.h.n) + 1, false);
    int covered_count = 0;
    for (const Edge& slot : slots) {
        for (Vertex v : slot) {
            if (!covered[static_cast<size_t>(v)]) {
                covered[static_cast<size_t>(v)] = true;
                ++covered_count;
            }
        }
    }
    if (covered_count == ctx.h.n) return cover_from_slots(ctx, slots);

    const Vertex v = pick_uncovered(ctx, covered);
    for (int i = 0; i < ctx.k; ++i) {
        Edge grown = edge_union(slots[static_cast<size_t>(i)], {v});
        std::optional<Edge> f = closure_min(ctx.h, grown);
        if (!f) continue;  // TOP: no edge contains e_i + v
        if (ctx.opts.flatness_hint &&
            ctx.slot_level(*f) <= ctx.slot_level(slots[static_cast<size_t>(i)]))
            ++ctx.stats.measure_violations;
        Edge saved = std::move(slots[static_cast<size_t>(i)]);
        slots[static_cast<size_t>(i)] = std::move(*f);
        auto r = solve_rec(ctx, slots, depth + 1);
        slots[static_cast<size_t>(i)] = std::move(saved);
        if (r) return r;
    }
    return std::nullopt;
}

}  // namespace

SolveResult solve(const Hypergraph& h, int k, const SolveOptions& opts) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    SolveResult result;

    const Edge full = h.all_vertices();
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (h.edges[i] == full) {
            if (k >= 1) {
                result.cover = Cover{{static_cast<int>(i) + 1}};
            } else if (h.n == 0) {
                result.cover = Cover{{}};
            }
            return result;
        }
    }
    if (k == 0 || h.n == 0) {
        if (h.n == 0) result.cover = Cover{{}};
        return result;
    }
    if (h.edges.empty()) return result;  // V nonempty, nothing to cover with

    ReduceResult red = reduce(h);
    if (red.reduced.n == 0) {
        // All edges were identical to X; any single edge covers V.
        result.cover = Cover{{1}};
        return result;
    }

    SearchCtx ctx{red.reduced, k, opts, result.stats, {}, {}};
    if (opts.flatness_hint) {
        const int d = *opts.flatness_hint;
        ClosureResult cr = intersection_closure(red.reduced);
        for (size_t i = 0; i < cr.closure.edges.size(); ++i)
            ctx.chain_len[cr.closure.edges[i]] = cr.chain_len[i];
        result.stats.measure_at_root = d * k;
    }
    if (opts.pick == VertexPick::Rare) {
        ctx.degree.assign(static_cast<size_t>(red.reduced.n) + 1, 0);
        for (const Edge& e : red.reduced.edges)
            for (Vertex v : e) ++ctx.degree[static_cast<size_t>(v)];
    }

    std::vector<Edge> slots(static_cast<size_t>(k));
    // Reduced edges keep their original positions, so indices transfer back
    // unchanged; the removed set X re-attaches to every chosen edge.
    result.cover = solve_rec(ctx, slots, 0);
    return result;
}

}  // namespace flatcover
