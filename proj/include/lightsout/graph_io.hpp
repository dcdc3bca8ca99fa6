#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lightsout/graph.hpp"

namespace lightsout {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6: order byte(s) followed by the upper triangle taken column by column
// ((0,1), (0,2), (1,2), (0,3), ...), six bits per printable byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge-list text, e.g. "n=6; 0-1,1-2". An empty edge list may be written
// "n=3" or "n=3;".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Accepts either format: text starting with "n=" is an edge list, anything
// else is graph6. An optional ">>graph6<<" header is skipped.
Graph parse_graph(std::string_view text);

}  // namespace lightsout
