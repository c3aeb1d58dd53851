#pragma once

// Discrete error norms over nodal profiles, and the peak diagnostic used by
// the shock runs.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

#include "stbspline/basis.hpp"

namespace stbs::metrics {

enum class L2Weighting { unweighted, h_weighted };

struct ErrorReport {
  double linf = 0.0;
  double l2 = 0.0;
  double peak_value = 0.0;
  double peak_location = 0.0;
  double time = 0.0;
};

struct PeakInfo {
  double value = 0.0;
  double location = 0.0;
};

inline void check_pair(std::span<const double> a, std::span<const double> b, const char* who) {
  if (a.empty() || a.size() != b.size())
    throw std::invalid_argument(std::string(who) + ": profiles must be nonempty and equally long");
}

inline double linf_norm(std::span<const double> numeric, std::span<const double> exact) {
  check_pair(numeric, exact, "linf_norm");
  double m = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) m = std::max(m, std::abs(numeric[i] - exact[i]));
  return m;
}

// Root of the sum of squared nodal errors; the h-weighted variant multiplies
// the sum by the grid spacing before the root.
inline double l2_norm(std::span<const double> numeric, std::span<const double> exact, double h,
                      L2Weighting weighting) {
  check_pair(numeric, exact, "l2_norm");
  if (weighting == L2Weighting::h_weighted && !(h > 0.0))
    throw std::invalid_argument("l2_norm: weighting needs a positive spacing");
  double acc = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double d = numeric[i] - exact[i];
    acc += d * d;
  }
  if (weighting == L2Weighting::h_weighted) acc *= h;
  return std::sqrt(acc);
}

// Largest profile value; ties resolve to the leftmost node.
inline PeakInfo peak(std::span<const double> profile, const basis::UniformGrid& grid) {
  if (profile.size() != static_cast<std::size_t>(grid.node_count()))
    throw std::invalid_argument("peak: profile length does not match the grid");
  PeakInfo best{profile[0], grid.node(0)};
  for (int i = 1; i < grid.node_count(); ++i) {
    const double v = profile[static_cast<std::size_t>(i)];
    if (v > best.value) best = {v, grid.node(i)};
  }
  return best;
}

inline ErrorReport score(std::span<const double> numeric, std::span<const double> exact,
                         const basis::UniformGrid& grid, L2Weighting weighting, double time) {
  ErrorReport r;
  r.linf = linf_norm(numeric, exact);
  r.l2 = l2_norm(numeric, exact, grid.spacing, weighting);
  const PeakInfo p = peak(numeric, grid);
  r.peak_value = p.value;
  r.peak_location = p.location;
  r.time = time;
  return r;
}

}  // namespace stbs::metrics
