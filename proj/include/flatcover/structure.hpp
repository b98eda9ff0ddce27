#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

struct ClosureBlowup : std::runtime_error {
    ClosureBlowup() : std::runtime_error("closure blow-up") {}
};

constexpr size_t kDefaultClosureCap = 1000000;

struct ClosureResult {
    Hypergraph closure;
    // For each closure edge: original edge index (0-based), or -1 for a
    // derived intersection (the seeded V counts as derived unless present).
    std::vector<int> origin;
    std::vector<int> chain_len;  // l_{H'}(e) per closure edge
    int longest_chain = 0;       // L

    int edge_index(const Edge& e) const;  // -1 if absent
    // A longest strict inclusion chain ending at the given closure edge,
    // as closure edge indices from minimal to e.
    std::vector<int> witness_chain(int closure_edge_index) const;
};

// All edges of h containing S, in input order (0-based indices).
std::vector<int> members_K(const Hypergraph& h, const Edge& s);

// M_H(S): TOP (tagged, = conceptually V) when K_H(S) is empty, otherwise the
// intersection of all edges containing S. nullopt encodes TOP.
std::optional<Edge> closure_min(const Hypergraph& h, const Edge& s);

// Fixed point of pairwise intersection over E + {V}; deterministic order:
// original edges first, then V, then derived intersections in breadth-first
// discovery order. Throws ClosureBlowup past the cap.
ClosureResult intersection_closure(const Hypergraph& h, size_t cap = kDefaultClosureCap);

enum class WitnessKind { SemiLadder, Ladder, Square };

struct WitnessPair {
    WitnessKind kind;
    int order = 0;             // the parameter d of the witness
    std::vector<Vertex> w;     // w_0..w_d (resp. w_1..w_d for squares)
    std::vector<Edge> f;       // matching edge list
};

// Direct re-evaluation of the defining incidence pattern.
bool verify_witness(const WitnessPair& wp);

// Exhaustive backtracking; edges tried by input index, vertices ascending.
std::optional<WitnessPair> find_semi_ladder(const Hypergraph& h, int d);
std::optional<WitnessPair> find_ladder(const Hypergraph& h, int d);
std::optional<WitnessPair> find_square(const Hypergraph& h, int d);

struct FlatnessReport {
    bool flat = false;
    int semi_ladder_index = 0;          // L(H')
    std::vector<Edge> chain;            // violating chain when !flat
};

// Decides (d+1)-semi-ladder-freeness via L(closure) <= d+1; falls back to
// direct semi-ladder search if the closure blows up.
FlatnessReport is_flat(const Hypergraph& h, int d, size_t cap = kDefaultClosureCap);

// L(H') = the least s such that h is s-semi-ladder-free.
int semi_ladder_index(const Hypergraph& h, size_t cap = kDefaultClosureCap);

std::string serialize_witness(const WitnessPair& wp);

}  // namespace flatcover
