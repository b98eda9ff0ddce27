#pragma once

#include <stdexcept>
#include <vector>

#include "flatcover/hypergraph.hpp"

namespace flatcover {

// Raised when a cover image fails to transfer through a grouping trace; this
// would contradict the instance-equivalence of grouping and must surface
// loudly.
struct EquivalenceViolation : std::runtime_error {
    EquivalenceViolation() : std::runtime_error("witness to equivalence-violation") {}
};

struct KernelOptions {
    bool check = false;  // verify flatness of the input up front
    size_t closure_cap = 1000000;
};

struct KernelResult {
    Hypergraph kernel;
    GroupTrace trace;
    int rounds = 0;
    std::vector<std::string> warnings;
};

// Repeated closure analysis + grouping until no oversized low-chain edge
// remains. Requires a reduced input; flatness is verified only under
// opts.check.
KernelResult kernelize(const Hypergraph& h, int k, int d, const KernelOptions& opts = {});

// Walks the trace backwards, replacing each kernel edge by its recorded
// preimage. The input cover must verify against the kernel.
Cover lift_cover(const Hypergraph& original, const Hypergraph& kernel, const GroupTrace& trace,
                 const Cover& kernel_cover);

// Forward image of an original cover through every grouping step; duplicates
// merge, so the size never increases.
Cover push_cover(const Hypergraph& original, const Hypergraph& kernel, const GroupTrace& trace,
                 const Cover& original_cover);

}  // namespace flatcover
