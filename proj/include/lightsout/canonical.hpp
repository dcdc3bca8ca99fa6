#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

// Largest order accepted by the canonical labeling search. The search is
// exponential in the worst case; sparse graphs up to this size are fast.
inline constexpr int kMaxCanonicalOrder = 24;

// Upper triangle of the canonically relabeled graph, row-major
// ((0,1), (0,2), ..., (0,n-1), (1,2), ...), packed 64 bits per word with the
// first pair in bit 0 of word 0. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> words;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

  // '0'/'1' rendering of the bitstring.
  std::string bitstring() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

// perm[v] is the canonical label of vertex v.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Row-major upper triangle of g as it stands (no relabeling).
CanonicalForm pack_upper_triangle(const Graph& g);

}  // namespace lightsout
