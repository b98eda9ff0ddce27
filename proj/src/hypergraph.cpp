#include "flatcover/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace flatcover {

Edge edge_union(const Edge& a, const Edge& b) {
    Edge out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Edge edge_intersect(const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Edge edge_minus(const Edge& a, const Edge& b) {
    Edge out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool edge_subset(const Edge& a, const Edge& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool edge_contains(const Edge& e, Vertex v) {
    return std::binary_search(e.begin(), e.end(), v);
}

bool Hypergraph::valid() const {
    if (n < 0) return false;
    for (const Edge& e : edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n) return false;
            if (i > 0 && e[i] <= e[i - 1]) return false;
        }
    }
    return true;
}

void Hypergraph::check() const {
    if (!valid()) throw std::invalid_argument("invalid hypergraph");
}

Edge Hypergraph::all_vertices() const {
    Edge v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

long long hg_size(const Hypergraph& h) {
    long long total = 0;
    for (const Edge& e : h.edges) total += static_cast<long long>(e.size());
    return total;
}

ReduceResult reduce(const Hypergraph& h) {
    if (h.edges.empty()) throw std::invalid_argument("cannot reduce edgeless hypergraph");
    Edge x = h.edges.front();
    for (size_t i = 1; i < h.edges.size() && !x.empty(); ++i)
        x = edge_intersect(x, h.edges[i]);

    // Compact V-X to 1..n'.
    std::vector<Vertex> rename(static_cast<size_t>(h.n) + 1, 0);
    int next = 0;
    for (Vertex v = 1; v <= h.n; ++v)
        if (!edge_contains(x, v)) rename[static_cast<size_t>(v)] = ++next;

    Hypergraph out;
    out.n = next;
    out.edges.reserve(h.edges.size());
    for (const Edge& e : h.edges) {
        Edge f;
        f.reserve(e.size());
        for (Vertex v : e)
            if (rename[static_cast<size_t>(v)] != 0) f.push_back(rename[static_cast<size_t>(v)]);
        out.edges.push_back(std::move(f));
    }
    return {std::move(out), std::move(x)};
}

bool is_reduced(const Hypergraph& h) {
    if (h.edges.empty()) return true;
    Edge x = h.edges.front();
    for (size_t i = 1; i < h.edges.size() && !x.empty(); ++i)
        x = edge_intersect(x, h.edges[i]);
    return x.empty();
}

Hypergraph dual(const Hypergraph& h) {
    Hypergraph out;
    out.n = static_cast<int>(h.edges.size());
    out.edges.assign(static_cast<size_t>(h.n), {});
    for (size_t j = 0; j < h.edges.size(); ++j)
        for (Vertex v : h.edges[j])
            out.edges[static_cast<size_t>(v) - 1].push_back(static_cast<Vertex>(j) + 1);
    return out;
}

GroupResult group(const Hypergraph& h, const Edge& s) {
    if (s.empty()) throw std::invalid_argument("group: S must be nonempty");
    for (Vertex v : s)
        if (v < 1 || v > h.n) throw std::invalid_argument("group: S not a subset of V");

    const Vertex fresh_raw = h.n + 1;

    // Rewrite edges over the uncompacted universe V - S + {n+1}.
    std::vector<Edge> rewritten;
    rewritten.reserve(h.edges.size());
    for (const Edge& e : h.edges) {
        Edge f = edge_minus(e, s);
        if (edge_subset(s, e)) f.push_back(fresh_raw);
        rewritten.push_back(std::move(f));
    }

    // Compact identifiers to 1..n'.
    std::vector<Vertex> rename(static_cast<size_t>(fresh_raw) + 1, 0);
    int next = 0;
    for (Vertex v = 1; v <= fresh_raw; ++v) {
        if (v <= h.n && edge_contains(s, v)) continue;
        rename[static_cast<size_t>(v)] = ++next;
    }

    GroupResult result;
    result.grouped.n = next;
    result.step.grouped_set = s;
    result.step.fresh_vertex = rename[static_cast<size_t>(fresh_raw)];
    result.step.forward.assign(h.edges.size(), -1);

    // Merge duplicate result edges, keeping the smallest preimage index.
    std::map<Edge, int> seen;  // compacted edge -> post index
    for (size_t pre = 0; pre < rewritten.size(); ++pre) {
        Edge f;
        f.reserve(rewritten[pre].size());
        for (Vertex v : rewritten[pre]) f.push_back(rename[static_cast<size_t>(v)]);
        std::sort(f.begin(), f.end());
        int post = static_cast<int>(result.grouped.edges.size());
        auto [it, inserted] = seen.emplace(f, post);
        if (inserted) {
            result.grouped.edges.push_back(std::move(f));
            result.step.preimage.push_back(static_cast<int>(pre));
            result.step.forward[pre] = post;
        } else {
            result.step.forward[pre] = it->second;
        }
    }
    return result;
}

Hypergraph dedupe(const Hypergraph& h) {
    Hypergraph out;
    out.n = h.n;
    std::map<Edge, bool> seen;
    for (const Edge& e : h.edges) {
        if (seen.emplace(e, true).second) out.edges.push_back(e);
    }
    return out;
}

bool verify_cover(const Hypergraph& h, const Cover& c) {
    std::vector<bool> covered(static_cast<size_t>(h.n) + 1, false);
    std::vector<bool> used(h.edges.size() + 1, false);
    for (int idx : c.edge_indices) {
        if (idx < 1 || idx > static_cast<int>(h.edges.size()))
            throw std::invalid_argument("verify_cover: edge index out of range");
        if (used[static_cast<size_t>(idx)])
            throw std::invalid_argument("verify_cover: duplicate edge index");
        used[static_cast<size_t>(idx)] = true;
        for (Vertex v : h.edges[static_cast<size_t>(idx) - 1]) covered[static_cast<size_t>(v)] = true;
    }
    for (Vertex v = 1; v <= h.n; ++v)
        if (!covered[static_cast<size_t>(v)]) return false;
    return true;
}

Hypergraph replay_trace(const Hypergraph& original, const GroupTrace& trace) {
    Hypergraph h = original;
    for (const GroupStep& step : trace.steps) h = group(h, step.grouped_set).grouped;
    return h;
}

}  // namespace flatcover
