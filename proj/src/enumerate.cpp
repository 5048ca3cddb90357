#include "ecclab/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ecclab {

namespace {

// Upper-triangle pair index in row-major order: (0,1), (0,2), ..., (n-2,n-1).
inline int pair_index(int i, int j, int n) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int nbits = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> (nbits - 1 - pair_index(i, j, n)) & 1) g.add_edge(i, j);
    return g;
}

// Iterated color refinement; returns stable vertex colors with
// isomorphism-invariant ids (assigned by sorted signature each round).
std::vector<int> refine_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    int ncolors = 1;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int u = 0; u < n; ++u) {
            sig[u].push_back(color[u]);
            std::vector<int> neigh;
            for (int v : g.neighbors(u)) neigh.push_back(color[v]);
            std::sort(neigh.begin(), neigh.end());
            sig[u].insert(sig[u].end(), neigh.begin(), neigh.end());
        }
        std::map<std::vector<int>, int> ids;
        for (int u = 0; u < n; ++u) ids.emplace(sig[u], 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        if (next == ncolors) break;
        for (int u = 0; u < n; ++u) color[u] = ids[sig[u]];
        ncolors = next;
    }
    return color;
}

std::uint64_t mask_of_ordering(const Graph& g, const std::vector<int>& pos, int nbits) {
    std::uint64_t mask = 0;
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int i = std::min(pos[u], pos[v]), j = std::max(pos[u], pos[v]);
            mask |= std::uint64_t{1} << (nbits - 1 - pair_index(i, j, n));
        }
    }
    return mask;
}

}  // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
    int n = g.order();
    if (n < 2) return 0;
    int nbits = n * (n - 1) / 2;

    std::vector<int> color = refine_colors(g);
    int ncolors = 1 + *std::max_element(color.begin(), color.end());
    std::vector<std::vector<int>> classes(ncolors);
    for (int u = 0; u < n; ++u) classes[color[u]].push_back(u);

    // try every ordering that lists the color classes in id order,
    // permuting freely inside each class; keep the smallest mask
    std::vector<int> pos(n);
    std::uint64_t best = ~std::uint64_t{0};
    auto assign_positions = [&]() {
        int p = 0;
        for (const auto& cls : classes)
            for (int u : cls) pos[u] = p++;
    };
    std::function<void(int)> rec = [&](int ci) {
        if (ci == ncolors) {
            assign_positions();
            best = std::min(best, mask_of_ordering(g, pos, nbits));
            return;
        }
        auto& cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            rec(ci + 1);
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(0);
    return best;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) throw DomainError("graph order must be positive");
    if (n > 8) throw DomainError("connected-graph enumeration supported up to 8 vertices");
    // grow one vertex at a time: every connected graph arises from a
    // connected graph one vertex smaller plus a new vertex on a nonempty
    // attachment subset
    std::vector<std::uint64_t> level = {0};  // K1
    for (int t = 2; t <= n; ++t) {
        std::set<std::uint64_t> next;
        for (std::uint64_t hmask : level) {
            Graph h = graph_from_mask(t - 1, hmask);
            for (unsigned subset = 1; subset < (1u << (t - 1)); ++subset) {
                Graph cand(t);
                for (auto [a, b] : h.edges()) cand.add_edge(a, b);
                for (int u = 0; u < t - 1; ++u)
                    if (subset >> u & 1) cand.add_edge(u, t - 1);
                next.insert(canonical_edge_mask(cand));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t mask : level) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::vector<Graph> nonisomorphic_trees(int n) {
    if (n < 1) throw DomainError("tree order must be positive");
    if (n > 10) throw DomainError("tree enumeration supported up to 10 vertices");
    std::vector<std::uint64_t> level = {0};  // K1
    for (int t = 2; t <= n; ++t) {
        std::set<std::uint64_t> next;
        for (std::uint64_t hmask : level) {
            Graph h = graph_from_mask(t - 1, hmask);
            for (int u = 0; u < t - 1; ++u) {
                Graph cand(t);
                for (auto [a, b] : h.edges()) cand.add_edge(a, b);
                cand.add_edge(u, t - 1);
                next.insert(canonical_edge_mask(cand));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t mask : level) out.push_back(graph_from_mask(n, mask));
    return out;
}

}  // namespace ecclab
