#pragma once

#include <cstdint>
#include <vector>

#include "ecclab/graph.hpp"

namespace ecclab {

// Exhaustive small-graph generation for corpus searches and tests.
// Graphs are produced once per isomorphism class, in a deterministic order.

// Canonical upper-triangle edge bitmask: minimal over all vertex orderings
// compatible with the refined color classes. Usable for n <= 11 (bitmask
// fits 55 bits); intended scale here is n <= 8.
std::uint64_t canonical_edge_mask(const Graph& g);

// All connected graphs on exactly n vertices, up to isomorphism (n <= 8 is
// the intended range; counts 1, 1, 2, 6, 21, 112, 853, 11117 for n=1..8).
std::vector<Graph> connected_graphs(int n);

// All trees on exactly n vertices up to isomorphism, by leaf augmentation
// with canonical-form deduplication.
std::vector<Graph> nonisomorphic_trees(int n);

}  // namespace ecclab
