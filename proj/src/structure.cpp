#include "flatcover/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace flatcover {

std::vector<int> members_K(const Hypergraph& h, const Edge& s) {
    std::vector<int> out;
    for (size_t i = 0; i < h.edges.size(); ++i)
        if (edge_subset(s, h.edges[i])) out.push_back(static_cast<int>(i));
    return out;
}

std::optional<Edge> closure_min(const Hypergraph& h, const Edge& s) {
    std::optional<Edge> acc;
    for (const Edge& e : h.edges) {
        if (!edge_subset(s, e)) continue;
        acc = acc ? edge_intersect(*acc, e) : e;
    }
    return acc;
}

int ClosureResult::edge_index(const Edge& e) const {
    for (size_t i = 0; i < closure.edges.size(); ++i)
        if (closure.edges[i] == e) return static_cast<int>(i);
    return -1;
}

std::vector<int> ClosureResult::witness_chain(int closure_edge_index) const {
    std::vector<int> chain;
    int cur = closure_edge_index;
    chain.push_back(cur);
    while (chain_len[static_cast<size_t>(cur)] > 0) {
        const int want = chain_len[static_cast<size_t>(cur)] - 1;
        for (size_t j = 0; j < closure.edges.size(); ++j) {
            if (chain_len[j] == want && closure.edges[j] != closure.edges[static_cast<size_t>(cur)] &&
                edge_subset(closure.edges[j], closure.edges[static_cast<size_t>(cur)])) {
                cur = static_cast<int>(j);
                chain.push_back(cur);
                break;
            }
        }
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

ClosureResult intersection_closure(const Hypergraph& h, size_t cap) {
    ClosureResult res;
    res.closure.n = h.n;

    std::map<Edge, int> index;
    auto add = [&](const Edge& e, int origin) -> bool {
        auto [it, inserted] = index.emplace(e, static_cast<int>(res.closure.edges.size()));
        if (!inserted) return false;
        if (res.closure.edges.size() >= cap) throw ClosureBlowup();
        res.closure.edges.push_back(e);
        res.origin.push_back(origin);
        return true;
    };

    for (size_t i = 0; i < h.edges.size(); ++i) add(h.edges[i], static_cast<int>(i));
    add(h.all_vertices(), -1);
    // V may coincide with an original edge; keep its recorded origin then.

    for (size_t i = 0; i < res.closure.edges.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            Edge inter = edge_intersect(res.closure.edges[i], res.closure.edges[j]);
            add(inter, -1);
        }
    }

    // Chain lengths by dynamic programming over the inclusion order.
    const size_t m = res.closure.edges.size();
    std::vector<size_t> by_size(m);
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](size_t a, size_t b) {
        return res.closure.edges[a].size() < res.closure.edges[b].size();
    });
    res.chain_len.assign(m, 0);
    for (size_t a : by_size) {
        int best = -1;
        for (size_t b : by_size) {
            if (res.closure.edges[b].size() >= res.closure.edges[a].size()) break;
            if (edge_subset(res.closure.edges[b], res.closure.edges[a]))
                best = std::max(best, res.chain_len[b]);
        }
        res.chain_len[a] = best + 1;
        res.longest_chain = std::max(res.longest_chain, res.chain_len[a]);
    }
    return res;
}

bool verify_witness(const WitnessPair& wp) {
    const auto& w = wp.w;
    const auto& f = wp.f;
    switch (wp.kind) {
        case WitnessKind::SemiLadder: {
            if (static_cast<int>(w.size()) != wp.order + 1 || f.size() != w.size()) return false;
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j) {
                    if (i == j && edge_contains(f[j], w[i])) return false;
                    if (i < j && !edge_contains(f[j], w[i])) return false;
                }
            break;
        }
        case WitnessKind::Ladder: {
            if (static_cast<int>(w.size()) != wp.order + 1 || f.size() != w.size()) return false;
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j)
                    if ((i < j) != edge_contains(f[j], w[i])) return false;
            break;
        }
        case WitnessKind::Square: {
            if (static_cast<int>(w.size()) != wp.order || f.size() != w.size()) return false;
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = 0; j < f.size(); ++j)
                    if ((i < 2 || j < 2) && !edge_contains(f[j], w[i])) return false;
            break;
        }
    }
    // W and F are sets: elements pairwise distinct.
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) return false;
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = i + 1; j < f.size(); ++j)
            if (f[i] == f[j]) return false;
    return true;
}

namespace {

// Backtracking over (f_t, w_t) pairs; ladder additionally forbids w_t in
// earlier edges.
bool extend_ladderlike(const Hypergraph& h, int d, bool ladder, std::vector<Vertex>& w,
                       std::vector<const Edge*>& f) {
    const int t = static_cast<int>(w.size());
    if (t == d + 1) return true;
    for (const Edge& cand : h.edges) {
        bool ok = true;
        for (int i = 0; i < t && ok; ++i) {
            if (!edge_contains(cand, w[static_cast<size_t>(i)])) ok = false;
        }
        if (!ok) continue;
        bool duplicate = false;
        for (const Edge* prev : f)
            if (*prev == cand) duplicate = true;
        if (duplicate) continue;
        f.push_back(&cand);
        for (Vertex v = 1; v <= h.n; ++v) {
            if (edge_contains(cand, v)) continue;
            if (std::find(w.begin(), w.end(), v) != w.end()) continue;
            if (ladder) {
                bool bad = false;
                for (const Edge* prev : f)
                    if (edge_contains(*prev, v)) bad = true;
                if (bad) continue;
            }
            w.push_back(v);
            if (extend_ladderlike(h, d, ladder, w, f)) return true;
            w.pop_back();
        }
        f.pop_back();
    }
    return false;
}

std::optional<WitnessPair> find_ladderlike(const Hypergraph& h, int d, bool ladder) {
    if (d < 1) throw std::invalid_argument("witness order must be >= 1");
    std::vector<Vertex> w;
    std::vector<const Edge*> f;
    if (!extend_ladderlike(h, d, ladder, w, f)) return std::nullopt;
    WitnessPair wp;
    wp.kind = ladder ? WitnessKind::Ladder : WitnessKind::SemiLadder;
    wp.order = d;
    wp.w = w;
    for (const Edge* e : f) wp.f.push_back(*e);
    return wp;
}

}  // namespace

std::optional<WitnessPair> find_semi_ladder(const Hypergraph& h, int d) {
    return find_ladderlike(h, d, false);
}

std::optional<WitnessPair> find_ladder(const Hypergraph& h, int d) {
    return find_ladderlike(h, d, true);
}

std::optional<WitnessPair> find_square(const Hypergraph& h, int d) {
    if (d < 1) throw std::invalid_argument("witness order must be >= 1");
    if (d == 1) {
        for (const Edge& e : h.edges) {
            if (e.empty()) continue;
            WitnessPair wp{WitnessKind::Square, 1, {e.front()}, {e}};
            return wp;
        }
        return std::nullopt;
    }
    // All of w_1..w_d lie in f_1 and f_2; w_1,w_2 lie in every f_j.
    for (size_t a = 0; a < h.edges.size(); ++a) {
        for (size_t b = a + 1; b < h.edges.size(); ++b) {
            if (h.edges[a] == h.edges[b]) continue;
            Edge inter = edge_intersect(h.edges[a], h.edges[b]);
            if (static_cast<int>(inter.size()) < d) continue;
            for (size_t p = 0; p < inter.size(); ++p) {
                for (size_t q = p + 1; q < inter.size(); ++q) {
                    const Vertex w1 = inter[p], w2 = inter[q];
                    std::vector<const Edge*> rest;
                    for (size_t j = 0; j < h.edges.size(); ++j) {
                        if (j == a || j == b) continue;
                        if (h.edges[j] == h.edges[a] || h.edges[j] == h.edges[b]) continue;
                        bool dup = false;
                        for (const Edge* r : rest)
                            if (*r == h.edges[j]) dup = true;
                        if (dup) continue;
                        if (edge_contains(h.edges[j], w1) && edge_contains(h.edges[j], w2))
                            rest.push_back(&h.edges[j]);
                    }
                    if (static_cast<int>(rest.size()) < d - 2) continue;
                    WitnessPair wp;
                    wp.kind = WitnessKind::Square;
                    wp.order = d;
                    wp.w = {w1, w2};
                    for (Vertex v : inter) {
                        if (static_cast<int>(wp.w.size()) == d) break;
                        if (v != w1 && v != w2) wp.w.push_back(v);
                    }
                    wp.f = {h.edges[a], h.edges[b]};
                    for (int j = 0; j < d - 2; ++j) wp.f.push_back(*rest[static_cast<size_t>(j)]);
                    return wp;
                }
            }
        }
    }
    return std::nullopt;
}

FlatnessReport is_flat(const Hypergraph& h, int d, size_t cap) {
    if (d < 1) throw std::invalid_argument("flatness parameter must be >= 1");
    FlatnessReport report;
    try {
        ClosureResult cr = intersection_closure(h, cap);
        report.semi_ladder_index = cr.longest_chain;
        report.flat = cr.longest_chain <= d + 1;
        if (!report.flat) {
            for (size_t i = 0; i < cr.closure.edges.size(); ++i) {
                if (cr.chain_len[i] == cr.longest_chain) {
                    for (int idx : cr.witness_chain(static_cast<int>(i)))
                        report.chain.push_back(cr.closure.edges[static_cast<size_t>(idx)]);
                    break;
                }
            }
        }
    } catch (const ClosureBlowup&) {
        report.flat = !find_semi_ladder(h, d + 1).has_value();
        report.semi_ladder_index = -1;  // unknown without the closure
    }
    return report;
}

int semi_ladder_index(const Hypergraph& h, size_t cap) {
    return intersection_closure(h, cap).longest_chain;
}

std::string serialize_witness(const WitnessPair& wp) {
    std::ostringstream out;
    const char* kind = wp.kind == WitnessKind::SemiLadder ? "semi-ladder"
                       : wp.kind == WitnessKind::Ladder   ? "ladder"
                                                          : "square";
    out << "w " << kind << " " << wp.order << "\n";
    out << "W:";
    for (Vertex v : wp.w) out << " " << v;
    out << "\n";
    out << "F:";
    for (const Edge& e : wp.f) {
        out << " (";
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << ")";
    }
    out << "\n";
    return out.str();
}

}  // namespace flatcover
