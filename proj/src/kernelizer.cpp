#include "flatcover/kernelizer.hpp"

#include <algorithm>
#include <limits>

#include "flatcover/structure.hpp"

namespace flatcover {

namespace {

// k^e with saturation; thresholds only ever get compared against edge sizes.
unsigned long long pow_sat(unsigned long long base, int exp) {
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<unsigned long long>::max() / base)
            return std::numeric_limits<unsigned long long>::max();
        r *= base;
    }
    return r;
}

}  // namespace

KernelResult kernelize(const Hypergraph& h, int k, int d, const KernelOptions& opts) {
    if (k < 1) throw std::invalid_argument("kernelize: k must be positive");
    if (d < 1) throw std::invalid_argument("kernelize: d must be positive");
    if (!is_reduced(h)) throw std::invalid_argument("kernelize: input must be reduced");
    if (opts.check) {
        FlatnessReport report = is_flat(h, d, opts.closure_cap);
        if (!report.flat) throw std::invalid_argument("kernelize: input is not d-flat");
    }

    KernelResult result;
    result.kernel = h;
    while (true) {
        ClosureResult cr = intersection_closure(result.kernel, opts.closure_cap);
        // Z = oversized low-chain closure edges; pick i minimum, then the
        // lexicographically smallest edge.
        const Edge* chosen = nullptr;
        int chosen_level = 0;
        for (size_t e = 0; e < cr.closure.edges.size(); ++e) {
            const int level = cr.chain_len[e];
            if (level <= 0) continue;
            if (cr.closure.edges[e].size() <= pow_sat(static_cast<unsigned long long>(k), level - 1))
                continue;
            if (!chosen || level < chosen_level ||
                (level == chosen_level && cr.closure.edges[e] < *chosen)) {
                chosen = &cr.closure.edges[e];
                chosen_level = level;
            }
        }
        if (!chosen) break;

        GroupResult gr = group(result.kernel, *chosen);
        result.kernel = std::move(gr.grouped);
        result.trace.steps.push_back(std::move(gr.step));
        ++result.rounds;
        if (!is_reduced(result.kernel)) {
            // Grouping is expected to preserve reducedness; recover and warn.
            result.warnings.push_back("round " + std::to_string(result.rounds) +
                                      ": reducedness lost, re-reducing");
            ReduceResult rr = reduce(result.kernel);
            result.kernel = std::move(rr.reduced);
        }
    }
    return result;
}

Cover lift_cover(const Hypergraph& original, const Hypergraph& kernel, const GroupTrace& trace,
                 const Cover& kernel_cover) {
    if (!verify_cover(kernel, kernel_cover))
        throw std::invalid_argument("lift_cover: input does not cover the kernel");
    std::vector<int> indices = kernel_cover.edge_indices;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        for (int& idx : indices) {
            if (idx < 1 || idx > static_cast<int>(it->preimage.size()))
                throw std::invalid_argument("lift_cover: index out of range for trace step");
            idx = it->preimage[static_cast<size_t>(idx) - 1] + 1;
        }
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    Cover lifted{std::move(indices)};
    if (!verify_cover(original, lifted)) throw EquivalenceViolation();
    return lifted;
}

Cover push_cover(const Hypergraph& original, const Hypergraph& kernel, const GroupTrace& trace,
                 const Cover& original_cover) {
    if (!verify_cover(original, original_cover))
        throw std::invalid_argument("push_cover: input does not cover the original");
    std::vector<int> indices = original_cover.edge_indices;
    for (const GroupStep& step : trace.steps) {
        for (int& idx : indices) {
            if (idx < 1 || idx > static_cast<int>(step.forward.size()))
                throw std::invalid_argument("push_cover: index out of range for trace step");
            idx = step.forward[static_cast<size_t>(idx) - 1] + 1;
        }
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    }
    Cover pushed{std::move(indices)};
    if (!verify_cover(kernel, pushed)) throw EquivalenceViolation();
    return pushed;
}

}  // namespace flatcover
