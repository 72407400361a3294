#pragma once

// Acyclic-subset sum-rate bounds driven by the side information graph:
// every nonempty node subset whose induced subgraph has no directed cycle
// contributes sum_{j in K} R_j <= 1/2 log2(1 + |K| P / min_{j in K} N_j).

#include <vector>

#include "icbounds/channel.hpp"
#include "icbounds/region.hpp"

namespace icb {

struct AcyclicSubsetBound {
    std::vector<int> subset;          // 1-based node ids, ascending
    double bound = 0.0;               // bits
    std::array<double, 3> coeffs{};   // indicator vector of the subset
};

// True iff the subgraph induced on `subset` contains a directed cycle.
// DFS over the induced edges; works for any node count. Throws
// PreconditionError on an empty or out-of-range subset.
bool induced_has_cycle(const SideInfoGraph& graph,
                       const std::vector<int>& subset);

// All nonempty acyclic subsets in canonical order (by size, then
// lexicographic).
std::vector<std::vector<int>> acyclic_subsets(const SideInfoGraph& graph);

std::vector<AcyclicSubsetBound> acyclic_subset_bounds(
    const SideInfoGraph& graph, const ChannelParams& params);

// One constraint per acyclic subset; singletons reduce to C_k.
HalfSpaceRegion theorem1_region(const SideInfoGraph& graph,
                                const ChannelParams& params);

}  // namespace icb
