#include "icbounds/side_info.hpp"

#include <algorithm>

namespace icb {

namespace {

// Directed-cycle test via DFS with colors; generic in the node count.
bool has_directed_cycle(int n, const std::vector<std::vector<int>>& adj) {
    enum { White, Gray, Black };
    std::vector<int> color(static_cast<size_t>(n), White);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != White) continue;
        // iterative DFS: (node, next-edge-index)
        std::vector<std::pair<int, size_t>> frames{{s, 0}};
        color[static_cast<size_t>(s)] = Gray;
        while (!frames.empty()) {
            auto& [u, idx] = frames.back();
            const auto& out = adj[static_cast<size_t>(u)];
            if (idx < out.size()) {
                const int v = out[idx++];
                if (color[static_cast<size_t>(v)] == Gray) return true;
                if (color[static_cast<size_t>(v)] == White) {
                    color[static_cast<size_t>(v)] = Gray;
                    frames.emplace_back(v, 0);
                }
            } else {
                color[static_cast<size_t>(u)] = Black;
                frames.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

bool induced_has_cycle(const SideInfoGraph& graph,
                       const std::vector<int>& subset) {
    if (subset.empty()) throw PreconditionError("subset must be nonempty");
    std::vector<int> nodes = subset;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int v : nodes) {
        if (v < 1 || v > 3) throw PreconditionError("subset nodes must be 1..3");
    }
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && graph.has_edge(nodes[static_cast<size_t>(a)],
                                         nodes[static_cast<size_t>(b)])) {
                adj[static_cast<size_t>(a)].push_back(b);
            }
        }
    }
    return has_directed_cycle(n, adj);
}

std::vector<std::vector<int>> acyclic_subsets(const SideInfoGraph& graph) {
    std::vector<std::vector<int>> all;
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> subset;
        for (int v = 1; v <= 3; ++v) {
            if (mask & (1 << (v - 1))) subset.push_back(v);
        }
        all.push_back(std::move(subset));
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<std::vector<int>> out;
    for (auto& s : all) {
        if (!induced_has_cycle(graph, s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<AcyclicSubsetBound> acyclic_subset_bounds(
    const SideInfoGraph& graph, const ChannelParams& params) {
    std::vector<AcyclicSubsetBound> out;
    for (const auto& subset : acyclic_subsets(graph)) {
        AcyclicSubsetBound b;
        b.subset = subset;
        double nmin = params.noise(subset.front());
        for (int v : subset) nmin = std::min(nmin, params.noise(v));
        b.bound = half_log2(1.0 + static_cast<double>(subset.size()) *
                                      params.P / nmin);
        for (int v : subset) b.coeffs[static_cast<size_t>(v - 1)] = 1.0;
        out.push_back(std::move(b));
    }
    return out;
}

HalfSpaceRegion theorem1_region(const SideInfoGraph& graph,
                                const ChannelParams& params) {
    HalfSpaceRegion region;
    for (const auto& b : acyclic_subset_bounds(graph, params)) {
        LinearConstraint c;
        c.coeffs = b.coeffs;
        c.bound = b.bound;
        std::string label;
        for (int v : b.subset) {
            if (!label.empty()) label += "+";
            label += "R" + std::to_string(v);
        }
        c.label = label;
        region.constraints.push_back(std::move(c));
    }
    return region;
}

}  // namespace icb
