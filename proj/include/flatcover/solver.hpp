#pragma once

#include <optional>
#include <stdexcept>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

enum class VertexPick { Smallest, Rare };

struct SolveOptions {
    std::optional<int> flatness_hint;   // enables measure instrumentation
    std::optional<long long> node_budget;
    VertexPick pick = VertexPick::Smallest;
};

struct SearchStats {
    long long nodes_visited = 0;
    int max_depth = 0;
    std::optional<int> measure_at_root;  // d*k, when a hint was given
    long long measure_violations = 0;    // recursion edges where the measure
                                         // failed to strictly decrease
};

struct SolveResult {
    std::optional<Cover> cover;  // nullopt = NO
    SearchStats stats;
};

// Bounded-search-tree Set Cover. Accepts arbitrary hypergraphs; runtime is
// only bounded on flat inputs. Covers are returned against the original edge
// indices.
SolveResult solve(const Hypergraph& h, int k, const SolveOptions& opts = {});

}  // namespace flatcover
