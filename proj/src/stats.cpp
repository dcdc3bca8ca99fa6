#include "lightsout/stats.hpp"

#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace lightsout {

double chi_square_sf(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

ChiSquare chi_square_uniform(const std::vector<long long>& observed, long long cells) {
  if (cells < static_cast<long long>(observed.size()) || cells <= 0) {
    throw std::invalid_argument("more observed cells than categories");
  }
  long long total = 0;
  for (long long o : observed) total += o;
  ChiSquare out;
  out.dof = static_cast<int>(cells - 1);
  if (total == 0 || cells == 1) return out;
  const double expected = double(total) / double(cells);
  for (long long o : observed) out.statistic += (o - expected) * (o - expected) / expected;
  out.statistic += double(cells - static_cast<long long>(observed.size())) * expected;
  out.p_value = chi_square_sf(out.statistic, out.dof);
  return out;
}

ChiSquare chi_square_two_sample(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("samples cover different cells");
  long long na = 0;
  long long nb = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    na += a[k];
    nb += b[k];
  }
  ChiSquare out;
  if (na == 0 || nb == 0) return out;
  int used = 0;
  const double total = double(na + nb);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double row = double(a[k] + b[k]);
    if (row == 0) continue;
    ++used;
    const double ea = row * na / total;
    const double eb = row * nb / total;
    out.statistic += (a[k] - ea) * (a[k] - ea) / ea + (b[k] - eb) * (b[k] - eb) / eb;
  }
  out.dof = used - 1;
  out.p_value = chi_square_sf(out.statistic, out.dof);
  return out;
}

}  // namespace lightsout
