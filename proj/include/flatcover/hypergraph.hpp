#pragma once

#include <string>
#include <vector>

namespace flatcover {

using Vertex = int;

// An edge is a strictly ascending list of 1-based vertex identifiers.
using Edge = std::vector<Vertex>;

// Sorted-merge set operations on edges.
Edge edge_union(const Edge& a, const Edge& b);
Edge edge_intersect(const Edge& a, const Edge& b);
Edge edge_minus(const Edge& a, const Edge& b);
bool edge_subset(const Edge& a, const Edge& b);
bool edge_contains(const Edge& e, Vertex v);

struct Hypergraph {
    int n = 0;                 // vertices are 1..n
    std::vector<Edge> edges;   // order is significant

    bool valid() const;        // every id in [1,n], edges strictly ascending
    void check() const;        // throws std::invalid_argument if !valid()
    Edge all_vertices() const; // the edge {1,...,n}

    bool operator==(const Hypergraph& other) const = default;
};

// 1-based indices into Hypergraph::edges, pairwise distinct.
struct Cover {
    std::vector<int> edge_indices;
};

// One grouping step: the set S that was contracted, the fresh vertex it
// became (post-compaction id), and for each post-grouping edge the index of
// the pre-grouping edge it came from.
struct GroupStep {
    Edge grouped_set;
    Vertex fresh_vertex = 0;
    std::vector<int> preimage;  // post edge index (0-based) -> pre edge index (0-based)
    std::vector<int> forward;   // pre edge index (0-based) -> post edge index (0-based)
};

struct GroupTrace {
    std::vector<GroupStep> steps;
};

// ||H|| = sum of |e| over all edges, duplicates counted.
long long hg_size(const Hypergraph& h);

struct ReduceResult {
    Hypergraph reduced;
    Edge removed;  // X = intersection of all edges
};

// Removes X = intersection of all edges from every edge and from V.
// Throws on an edgeless hypergraph.
ReduceResult reduce(const Hypergraph& h);

bool is_reduced(const Hypergraph& h);

// Dual hypergraph: vertices are edge indices of h; dual edge j collects the
// indices of original edges containing vertex j.
Hypergraph dual(const Hypergraph& h);

struct GroupResult {
    Hypergraph grouped;
    GroupStep step;
};

// Grouping of S per the rewrite rule: edges not containing S become e-S,
// edges containing S become e-S+{v} with v fresh. Duplicate result edges
// merge, keeping the smallest preimage index. Identifiers are compacted back
// to 1..n'.
GroupResult group(const Hypergraph& h, const Edge& s);

// Removes duplicate edges, keeping the first occurrence.
Hypergraph dedupe(const Hypergraph& h);

// True iff the union of the indexed edges equals V. Throws on a bad index.
bool verify_cover(const Hypergraph& h, const Cover& c);

// Replays a grouping trace from scratch; the result must match the kernel
// bit-exactly.
Hypergraph replay_trace(const Hypergraph& original, const GroupTrace& trace);

}  // namespace flatcover
