#include "flatcover/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "flatcover/structure.hpp"

namespace flatcover {

namespace {

using Mask = std::vector<uint64_t>;

Mask edge_mask(const Edge& e, int n) {
    Mask m(static_cast<size_t>(n + 63) / 64, 0);
    for (Vertex v : e) m[static_cast<size_t>(v - 1) / 64] |= 1ULL << ((v - 1) % 64);
    return m;
}

bool mask_full(const Mask& m, int n) {
    for (int v = 0; v < n; ++v)
        if (!(m[static_cast<size_t>(v) / 64] & (1ULL << (v % 64)))) return false;
    return true;
}

void mask_or(Mask& acc, const Mask& m) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] |= m[i];
}

}  // namespace

MinCoverResult brute_force_min_cover(const Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    if (m > kBruteForceEdgeGuard)
        throw std::invalid_argument("brute_force_min_cover: too many edges");

    MinCoverResult result;
    if (h.n == 0) {
        result.coverable = true;
        return result;
    }

    std::vector<Mask> masks;
    masks.reserve(static_cast<size_t>(m));
    Mask all(static_cast<size_t>(h.n + 63) / 64, 0);
    for (const Edge& e : h.edges) {
        masks.push_back(edge_mask(e, h.n));
        mask_or(all, masks.back());
    }
    if (!mask_full(all, h.n)) return result;  // some vertex in no edge

    for (int c = 1; c <= m; ++c) {
        // Index combinations of size c in lexicographic order.
        std::vector<int> comb(static_cast<size_t>(c));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            Mask acc(all.size(), 0);
            for (int idx : comb) mask_or(acc, masks[static_cast<size_t>(idx)]);
            if (mask_full(acc, h.n)) {
                result.coverable = true;
                result.min_size = c;
                for (int idx : comb) result.cover.edge_indices.push_back(idx + 1);
                return result;
            }
            int i = c - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == m - c + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return result;  // unreachable when all is full, kept for form
}

Cover greedy_cover(const Hypergraph& h) {
    std::vector<bool> covered(static_cast<size_t>(h.n) + 1, false);
    int remaining = h.n;
    Cover c;
    while (remaining > 0) {
        int best = -1, best_gain = 0;
        for (size_t i = 0; i < h.edges.size(); ++i) {
            int gain = 0;
            for (Vertex v : h.edges[i])
                if (!covered[static_cast<size_t>(v)]) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) throw std::invalid_argument("greedy_cover: uncoverable vertex");
        c.edge_indices.push_back(best + 1);
        for (Vertex v : h.edges[static_cast<size_t>(best)]) {
            if (!covered[static_cast<size_t>(v)]) {
                covered[static_cast<size_t>(v)] = true;
                --remaining;
            }
        }
    }
    std::sort(c.edge_indices.begin(), c.edge_indices.end());
    return c;
}

namespace {

// Random partition of 1..n into at most b nonempty blocks.
std::vector<Edge> random_partition(SplitMix64& rng, int n, int b) {
    std::vector<Edge> blocks(static_cast<size_t>(b));
    for (Vertex v = 1; v <= n; ++v)
        blocks[rng.below(static_cast<uint64_t>(b))].push_back(v);
    std::erase_if(blocks, [](const Edge& e) { return e.empty(); });
    return blocks;
}

Hypergraph unconstrained_draw(SplitMix64& rng, int n, int m) {
    Hypergraph h;
    h.n = n;
    for (int i = 0; i < m; ++i) {
        Edge e;
        for (Vertex v = 1; v <= n; ++v)
            if (rng.coin()) e.push_back(v);
        h.edges.push_back(std::move(e));
    }
    return h;
}

// Laminar hierarchy: top partition, blocks split recursively while the level
// allows; edges are all blocks of all levels.
void split_block(SplitMix64& rng, const Edge& block, int level, int max_level,
                 std::vector<Edge>& out) {
    out.push_back(block);
    if (level >= max_level || block.size() < 2 || !rng.coin()) return;
    const int parts = 2 + static_cast<int>(rng.below(2));
    std::vector<Edge> sub(static_cast<size_t>(parts));
    for (Vertex v : block) sub[rng.below(static_cast<uint64_t>(parts))].push_back(v);
    std::erase_if(sub, [](const Edge& e) { return e.empty(); });
    if (sub.size() < 2) return;
    for (const Edge& s : sub) split_block(rng, s, level + 1, max_level, out);
}

Hypergraph flat_draw(SplitMix64& rng, int n, int m, int d) {
    const int b = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(std::max(1, n / 2))));
    std::vector<Edge> top = random_partition(rng, n, b);
    std::vector<Edge> edges;
    if (d == 1) {
        edges = top;
    } else {
        for (const Edge& blk : top) split_block(rng, blk, 2, d, edges);
        // Noise: unions of two distinct top blocks; these never nest.
        int want = m - static_cast<int>(edges.size());
        for (int i = 0; i < want && top.size() >= 2; ++i) {
            size_t a = rng.below(top.size());
            size_t c = rng.below(top.size());
            if (a == c) continue;
            edges.push_back(edge_union(top[a], top[c]));
        }
    }
    Hypergraph h;
    h.n = n;
    h.edges = std::move(edges);
    return dedupe(h);
}

}  // namespace

GenResult gen(const GenSpec& spec) {
    if (spec.n < 0 || spec.m < 0 || spec.d < 1) throw std::invalid_argument("gen: invalid spec");
    SplitMix64 rng(spec.seed);
    GenResult result;

    if (spec.mode == GenMode::Unconstrained) {
        result.hypergraph = unconstrained_draw(rng, spec.n, spec.m);
        return result;
    }

    for (int attempt = 0; attempt < spec.rejection_budget; ++attempt) {
        Hypergraph h;
        std::optional<Cover> planted;
        if (spec.mode == GenMode::RandomFlat) {
            h = flat_draw(rng, spec.n, spec.m, spec.d);
        } else {
            // PlantedCover: a partition cover first, then flatness-friendly
            // noise edges.
            const int b = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(std::max(1, spec.n / 2))));
            std::vector<Edge> blocks = random_partition(rng, spec.n, b);
            if (blocks.size() < 2) continue;
            h.n = spec.n;
            h.edges = blocks;
            planted = Cover{};
            for (size_t i = 0; i < blocks.size(); ++i)
                planted->edge_indices.push_back(static_cast<int>(i) + 1);
            if (spec.d >= 2) {
                int want = spec.m - static_cast<int>(h.edges.size());
                for (int i = 0; i < want && blocks.size() >= 2; ++i) {
                    size_t a = rng.below(blocks.size());
                    size_t c = rng.below(blocks.size());
                    if (a == c) continue;
                    h.edges.push_back(edge_union(blocks[a], blocks[c]));
                }
                h = dedupe(h);
            }
        }
        if (h.edges.size() < 2 || !is_reduced(h)) continue;
        if (!is_flat(h, spec.d).flat) continue;
        result.hypergraph = std::move(h);
        result.planted = std::move(planted);
        return result;
    }
    throw std::runtime_error("gen: rejection budget exhausted");
}

}  // namespace flatcover
