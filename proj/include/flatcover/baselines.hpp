#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

// splitmix64: golden-ratio increment, two xor-shift-multiply mixing rounds.
// Fixed so every consumer reproduces streams bit-exactly.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0; rejection-free modulo is acceptable
    // at desk scale.
    uint64_t below(uint64_t bound) { return next() % bound; }

    bool coin() { return next() & 1; }

private:
    uint64_t state_;
};

constexpr int kBruteForceEdgeGuard = 25;

struct MinCoverResult {
    bool coverable = false;
    int min_size = 0;
    Cover cover;  // a witness of minimum size, when coverable
};

// Exact minimum by subset enumeration in increasing cardinality.
// Guarded at |E| <= 25.
MinCoverResult brute_force_min_cover(const Hypergraph& h);

// Largest-marginal-gain greedy; tie-break = smallest edge index. No ratio
// guarantee claimed. Throws if some vertex is uncoverable.
Cover greedy_cover(const Hypergraph& h);

enum class GenMode { RandomFlat, PlantedCover, Unconstrained };

struct GenSpec {
    uint64_t seed = 0;
    int n = 0;
    int m = 0;  // target edge count
    int d = 1;
    GenMode mode = GenMode::Unconstrained;
    int rejection_budget = 10000;
};

struct GenResult {
    Hypergraph hypergraph;
    std::optional<Cover> planted;  // PlantedCover mode only
};

// Deterministic instance generator; identical GenSpec yields bit-identical
// output. RandomFlat and PlantedCover reject candidates until the instance
// is reduced and d-flat.
GenResult gen(const GenSpec& spec);

}  // namespace flatcover
