#pragma once

#include <cstdint>
#include <vector>

namespace lightsout {

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  bool pass(double alpha = 0.001) const { return p_value > alpha; }
};

// Upper tail of the chi-square distribution.
double chi_square_sf(double statistic, int dof);

// Goodness of fit against equal cell probabilities over `cells` cells.
// `observed` lists the non-empty cells only; the rest count as zero.
ChiSquare chi_square_uniform(const std::vector<long long>& observed, long long cells);

// Two-sample homogeneity test on paired cell counts.
ChiSquare chi_square_two_sample(const std::vector<long long>& a, const std::vector<long long>& b);

}  // namespace lightsout
