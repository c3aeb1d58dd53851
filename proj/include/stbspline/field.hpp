#pragma once

// One time level of the cubic-spline field: the amplitude vector over a space
// grid, knot-point evaluation through the exact stencils, dense evaluation
// between knots, and interpolatory fitting with derivative end conditions.

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stbspline/basis.hpp"
#include "stbspline/errors.hpp"
#include "stbspline/linsys.hpp"

namespace stbs::field {

using basis::UniformGrid;

// Value and first two space derivatives of a level at one grid node.
struct NodalTriple {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Amplitudes sigma_{-1} .. sigma_{m+1} over a space grid, m = interior_count.
// Indexing accepts -1 .. m+1 so the ghost entries read naturally.
class CoefficientVector {
 public:
  explicit CoefficientVector(UniformGrid grid)
      : grid_(grid), values_(static_cast<std::size_t>(grid.interior_count) + 3, 0.0) {}

  CoefficientVector(UniformGrid grid, std::vector<double> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.interior_count) + 3)
      throw std::invalid_argument("CoefficientVector: amplitude count does not match the grid");
    for (double v : values_)
      if (!std::isfinite(v)) throw solver_error("CoefficientVector: non-finite amplitude");
  }

  double operator[](int i) const {
    if (i < -1 || i > grid_.interior_count + 1)
      throw std::out_of_range("CoefficientVector: index " + std::to_string(i) + " out of range");
    return values_[static_cast<std::size_t>(i + 1)];
  }

  const UniformGrid& grid() const { return grid_; }
  int max_node() const { return grid_.interior_count; }
  std::span<const double> raw() const { return values_; }

 private:
  UniformGrid grid_;
  std::vector<double> values_;
};

// Knot-point value and derivatives via the integer stencils
// (1,4,1), (-3/h, 0, 3/h), (6/h^2, -12/h^2, 6/h^2).
inline NodalTriple eval_nodal(const CoefficientVector& c, int i) {
  if (i < 0 || i > c.max_node())
    throw std::out_of_range("eval_nodal: node " + std::to_string(i) + " out of range");
  const double h = c.grid().spacing;
  const double sl = c[i - 1];
  const double sc = c[i];
  const double sr = c[i + 1];
  return {sl + 4.0 * sc + sr, 3.0 / h * (sr - sl), 6.0 / (h * h) * (sl - 2.0 * sc + sr)};
}

// Dense value anywhere in [a, b]; sums the four basis functions whose
// supports cover x.
inline double eval_at(const CoefficientVector& c, double x) {
  const UniformGrid& g = c.grid();
  const double slack = 1e-12 * std::max(1.0, std::abs(g.left()) + std::abs(g.right()));
  if (x < g.left() - slack || x > g.right() + slack)
    throw std::out_of_range("eval_at: x = " + std::to_string(x) + " outside the domain");
  int cell = static_cast<int>(std::floor((x - g.origin) / g.spacing));
  cell = std::clamp(cell, 0, g.interior_count - 1);
  double acc = 0.0;
  for (int i = cell - 1; i <= cell + 2; ++i) acc += c[i] * basis::cubic_eval(i, x, g);
  return acc;
}

// alpha * a + beta * b, entrywise over matching grids.
inline CoefficientVector linear_combine(double alpha, const CoefficientVector& a, double beta,
                                        const CoefficientVector& b) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument("linear_combine: levels live on different grids");
  std::vector<double> out(a.raw().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = alpha * a.raw()[k] + beta * b.raw()[k];
  return CoefficientVector(a.grid(), std::move(out));
}

// Interpolatory fit: nodal values from samples, first-derivative end
// conditions d_left and d_right. Interior rows are the value stencil;
// the end conditions become the two ghost-elimination rows.
inline CoefficientVector fit_initial(std::span<const double> samples, double d_left, double d_right,
                                     const UniformGrid& grid) {
  const int m = grid.interior_count;
  if (static_cast<int>(samples.size()) != m + 1)
    throw std::invalid_argument("fit_initial: need exactly one sample per grid node");
  for (double s : samples)
    if (!std::isfinite(s)) throw std::invalid_argument("fit_initial: non-finite sample");
  if (!std::isfinite(d_left) || !std::isfinite(d_right))
    throw std::invalid_argument("fit_initial: non-finite end derivative");

  linsys::InteriorRows rows(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    rows.left[static_cast<std::size_t>(i)] = 1.0;
    rows.center[static_cast<std::size_t>(i)] = 4.0;
    rows.right[static_cast<std::size_t>(i)] = 1.0;
    rows.rhs[static_cast<std::size_t>(i)] = samples[static_cast<std::size_t>(i)];
  }
  const double k = 3.0 / grid.spacing;
  linsys::CondensationRecord rec;
  rec.left_row = {-k, 0.0, k, d_left};
  rec.right_row = {k, 0.0, -k, d_right};
  return CoefficientVector(grid, linsys::condense_and_solve(rows, rec));
}

// Fourth-order one-sided estimates of the end slopes from nodal samples, for
// callers without analytic derivative data.
inline std::pair<double, double> fd_end_derivatives(std::span<const double> samples, double h) {
  if (samples.size() < 5)
    throw std::invalid_argument("fd_end_derivatives: need at least five samples");
  if (!(h > 0.0)) throw std::invalid_argument("fd_end_derivatives: spacing must be positive");
  const auto one_sided = [h](double f0, double f1, double f2, double f3, double f4) {
    return (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) / (12.0 * h);
  };
  const std::size_t n = samples.size() - 1;
  const double dl = one_sided(samples[0], samples[1], samples[2], samples[3], samples[4]);
  const double dr =
      -one_sided(samples[n], samples[n - 1], samples[n - 2], samples[n - 3], samples[n - 4]);
  return {dl, dr};
}

}  // namespace stbs::field
