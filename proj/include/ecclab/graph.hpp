#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecclab/errors.hpp"

namespace ecclab {

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Immutable once built (add_edge is the builder entry point).
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int size() const { return edge_count_; }

    // Throws DomainError on self-loop, out-of-range endpoint or duplicate.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int u) const;

    // All edges as normalized (u < v) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_;
    int edge_count_;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// All-pairs graph distances, kept as exact integers.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

using EccentricityVector = std::vector<int>;

// First line "n <count>", then one "u v" pair per line (0-based).
Graph parse_edge_list(const std::string& text);

// Complete multipartite graph K_{n1,...,nk}; part i occupies the contiguous
// index block starting at n1+...+n_{i-1}. Requires k >= 2 and all sizes >= 1.
Graph complete_multipartite(const std::vector<int>& sizes);

// Copy of g without edge {u,v}; the edge must be present.
Graph delete_edge(const Graph& g, int u, int v);

// BFS from every vertex. Throws ConnectivityError on a disconnected graph,
// naming one unreachable pair.
DistanceMatrix bfs_all_pairs(const Graph& g);

// Row maxima of a distance matrix.
EccentricityVector eccentricities(const DistanceMatrix& d);

bool is_connected(const Graph& g);

}  // namespace ecclab
