#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

// ---- d-Constraint-Cover -------------------------------------------------

struct Literal {
    int var = 0;  // 1-based index into X
    int bit = 0;  // 0 or 1
    auto operator<=>(const Literal&) const = default;
};

// A 1-constraint: canonical form is sorted by variable, variables distinct.
using Constraint1 = std::vector<Literal>;
// A 2-constraint: sorted 0-based indices into CCInstance::c1.
using Constraint2 = std::vector<int>;

struct CCInstance {
    int d = 0;
    long long k = 0;
    int num_vars = 0;  // |X| = d^2 k
    std::vector<Constraint1> c1;
    std::vector<Constraint2> c2;

    void check() const;  // throws std::invalid_argument on malformed input
};

struct CCSolution {
    std::vector<int> assignment;  // one bit per variable, index 0 = x_1
    std::vector<int> k1;          // sorted 0-based c1 indices, size d*k
    std::vector<int> k2;          // sorted 0-based c2 indices, size k
};

struct CCVerifyResult {
    bool ok = false;
    std::string violation;  // first violated point, empty when ok
};

CCVerifyResult cc_verify(const CCInstance& inst, const CCSolution& sol);

// Raised when a cover of size <= k' cannot be decomposed into the e1/e2/e3
// shape, or when the reconstructed solution fails verification; either would
// falsify the decomposition argument for the reduction.
struct Lemma8Counterexample : std::runtime_error {
    explicit Lemma8Counterexample(const std::string& what)
        : std::runtime_error("Lemma 8 counterexample: " + what) {}
};

struct SetCoverReduction {
    Hypergraph hypergraph;
    long long k_prime = 0;  // (d^2 + d + 1) k

    // Vertex blocks: v1 (per variable), v2 (per literal), v3 (per c1).
    int num_vars = 0;
    int num_c1 = 0;
    int v1(int var) const { return var; }
    int v2(int var, int bit) const { return num_vars + 2 * (var - 1) + bit + 1; }
    int v3(int c1_index) const { return 3 * num_vars + c1_index + 1; }
    // Edge blocks, 1-based: e1 (per literal), e2 (per c1), e3 (per c2).
    int e1(int var, int bit) const { return 2 * (var - 1) + bit + 1; }
    int e2(int c1_index) const { return 2 * num_vars + c1_index + 1; }
    int e3(int c2_index) const { return 2 * num_vars + num_c1 + c2_index + 1; }
};

SetCoverReduction cc_to_setcover(const CCInstance& inst);

Cover cc_solution_to_cover(const CCInstance& inst, const CCSolution& sol);

// Decomposes a verifying cover of size <= k' back into a CC solution; any
// shape violation raises Lemma8Counterexample.
CCSolution cover_to_cc_solution(const CCInstance& inst, const Cover& cover);

// ---- s-Dimensional Matching --------------------------------------------

struct MDMInstance {
    int n = 0;  // ground elements 1..n
    int s = 0;  // tuple arity
    std::vector<std::vector<int>> tuples;
    int l = 0;  // target matching size

    void check() const;
};

bool tuples_orthogonal(const std::vector<int>& a, const std::vector<int>& b);

// Raised by solution extraction when a claim-shape check fails.
struct Lemma10Counterexample : std::runtime_error {
    std::string claim;  // "claim-1", "claim-2" or "claim-3"
    Lemma10Counterexample(std::string claim_label, const std::string& what)
        : std::runtime_error("Lemma 10 counterexample: " + claim_label + ": " + what),
          claim(std::move(claim_label)) {}
};

struct MDMReductionLayout {
    int d = 0, c = 0, s = 0;
    int n_padded = 0;          // n + padding, n_padded = 1 (mod d)
    int padding = 0;
    long long m = 0;           // n_padded^c
    int l = 0;
    long long k = 0;           // d * l * m

    // Constraint index tables, all 0-based into CCInstance::c1/c2.
    // Addressing uses p in [1..l], q,r in [1..d], i in [0..m-1], j in [1..d].
    std::vector<int> c3_table;  // (p,q,r,i)
    std::vector<int> c4_table;  // (p,q,r,i)
    std::vector<int> c5_table;  // (p,q,T,j), T in [0..m^d-1]
    std::vector<int> c6_table;  // (p,U,j),   U in [0..m^(d*d)-1]

    int var(int p, int q, int r, long long i, int j) const;
    std::vector<int> phi(long long i) const;       // lexicographic V^c tuple
    long long phi_inv(const std::vector<int>& t) const;

    int c3(int p, int q, int r, long long i) const;
    int c4(int p, int q, int r, long long i) const;
    int c5(int p, int q, long long t_index, int j) const;
    int c6(int p, long long t_index, int j) const;
};

struct MDMReduction {
    CCInstance instance;
    MDMReductionLayout layout;
};

// The appendix reduction: requires s = c*d^2, d >= 2, c >= 1. Pads the
// ground set with fresh elements until n = 1 (mod d).
MDMReduction mdm_to_cc(const MDMInstance& inst, int d, int c);

// Builds the planted CC solution from a matching of size l contained in S.
CCSolution matching_to_cc_solution(const MDMInstance& inst, const MDMReductionLayout& layout,
                                   const std::vector<std::vector<int>>& matching);

// Extracts the matching encoded by a CC solution, checking the claim shapes.
std::vector<std::vector<int>> cc_solution_to_matching(const MDMInstance& inst,
                                                      const MDMReductionLayout& layout,
                                                      const CCSolution& sol);

// Exact maximum matching size by enumeration; guarded at |S| <= 20.
int mdm_brute_force(const MDMInstance& inst);

// ---- text formats -------------------------------------------------------

CCInstance parse_cc(std::istream& in);
CCInstance parse_cc(const std::string& text);
std::string serialize_cc(const CCInstance& inst);

MDMInstance parse_mdm(std::istream& in);
MDMInstance parse_mdm(const std::string& text);
std::string serialize_mdm(const MDMInstance& inst);

}  // namespace flatcover
