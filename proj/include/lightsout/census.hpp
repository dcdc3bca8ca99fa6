#pragma once

#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

// Excess degree handled by compute_E. Core components then carry at most
// kMaxCensusExcess + 1 edges, well inside the connected catalog.
inline constexpr int kMaxCensusExcess = 7;
inline constexpr int kMaxCensusM = 3;

struct CensusResult {
  int d = 0;
  int n = 0;
  std::vector<Graph> graphs;  // one per isomorphism class
  int count = 0;
};

// g with every isolated vertex and every isolated edge removed. What is left
// has excess degree equal to that of g.
Graph reduced_core(const Graph& g);

// Graphs with no isolated vertex and no K2 component whose excess degree is d,
// one per class. These are exactly the possible reduced cores.
std::vector<Graph> cores_with_excess(int d);

// n-vertex graphs of excess degree d whose complement is universally
// solvable (E^n_d).
CensusResult compute_E(int n, int d);

// n-vertex universally solvable graphs with N - floor(n/2) - m edges
// (U^n_m). The result's d field holds m.
CensusResult compute_U(int n, int m);

}  // namespace lightsout
