#pragma once

#include <string>

#include "ecclab/graph.hpp"

namespace ecclab {

// Decode one graph in graph6 format (short form, n <= 62). An optional
// ">>graph6<<" prefix is accepted. Throws ParseError with the offending
// byte offset on malformed input.
Graph parse_graph6(const std::string& text);

// Encode as short-form graph6 (requires order <= 62).
std::string encode_graph6(const Graph& g);

}  // namespace ecclab
