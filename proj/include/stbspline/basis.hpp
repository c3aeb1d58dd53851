#pragma once

// Quadratic and cubic B-spline bases on uniform knot grids, plus the exact
// knot-point stencils their expansions induce. The quadratic family carries
// the time direction, the cubic family the space direction. Both are
// normalized so that knot values are small integers: the quadratic spline
// takes the value 1 at its two interior knots, the cubic takes 4 at its
// center knot and 1 at the neighbours.

#include <array>
#include <cmath>
#include <cstddef>

#include "stbspline/errors.hpp"

namespace stbs::basis {

// Uniform grid with ghost indices past both ends. node(k) is defined for any
// integer k; indices 0..interior_count span the physical domain and
// ghost_count says how far past the ends the basis bookkeeping reaches.
struct UniformGrid {
  double origin = 0.0;
  double spacing = 1.0;
  int interior_count = 2;
  int ghost_count = 0;

  UniformGrid() = default;
  UniformGrid(double origin_, double spacing_, int interior, int ghosts)
      : origin(origin_), spacing(spacing_), interior_count(interior), ghost_count(ghosts) {
    if (!(spacing > 0.0)) throw config_error("UniformGrid: spacing must be positive");
    if (interior_count < 2) throw config_error("UniformGrid: need at least two intervals");
    if (ghost_count < 0) throw config_error("UniformGrid: ghost count must be nonnegative");
  }

  double node(int k) const { return origin + k * spacing; }
  double left() const { return origin; }
  double right() const { return node(interior_count); }
  int node_count() const { return interior_count + 1; }

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

// One row of knot-point weights. The weights are exact integers; each entry
// carries spacing^spacing_power, applied on demand so the integers stay
// available for exact checks.
template <std::size_t N>
struct StencilRow {
  std::array<int, N> weights{};
  int spacing_power = 0;

  double entry(std::size_t k, double spacing) const {
    double w = static_cast<double>(weights[k]);
    for (int p = 0; p < spacing_power; ++p) w *= spacing;
    for (int p = 0; p > spacing_power; --p) w /= spacing;
    return w;
  }

  int weight_sum() const {
    int s = 0;
    for (int w : weights) s += w;
    return s;
  }
};

// Weights of the amplitudes delta^{j+o}, o = -2..+1, in the expansion value
// and time derivative at knot t^j. Value: delta^{j-1} + delta^j. Derivative:
// (2/dt)(delta^j - delta^{j-1}).
struct QuadNodalStencil {
  StencilRow<4> value{{0, 1, 1, 0}, 0};
  StencilRow<4> d1{{0, -2, 2, 0}, -1};
};

// Weights of the amplitudes sigma_{i+o}, o = -2..+2, in the expansion value
// and first two space derivatives at knot x_i.
struct CubicNodalStencil {
  StencilRow<5> value{{0, 1, 4, 1, 0}, 0};
  StencilRow<5> d1{{0, -3, 0, 3, 0}, -1};
  StencilRow<5> d2{{0, 6, -12, 6, 0}, -2};
};

constexpr QuadNodalStencil quad_nodal_stencil() { return {}; }
constexpr CubicNodalStencil cubic_nodal_stencil() { return {}; }

// Quadratic B-spline attached to knot index j, supported on
// [t^{j-1}, t^{j+2}]. Piecewise in s = (t - t^{j-1}) / dt:
//   s^2 on [0,1],   -3 + 6s - 2s^2 on [1,2],   (3-s)^2 on [2,3].
inline double quad_eval(int j, double t, const UniformGrid& grid) {
  const double s = (t - grid.node(j - 1)) / grid.spacing;
  if (s <= 0.0 || s >= 3.0) return 0.0;
  if (s <= 1.0) return s * s;
  if (s <= 2.0) return -3.0 + s * (6.0 - 2.0 * s);
  const double w = 3.0 - s;
  return w * w;
}

inline double quad_deriv(int j, double t, const UniformGrid& grid) {
  const double s = (t - grid.node(j - 1)) / grid.spacing;
  if (s <= 0.0 || s >= 3.0) return 0.0;
  const double inv = 1.0 / grid.spacing;
  if (s <= 1.0) return 2.0 * s * inv;
  if (s <= 2.0) return (6.0 - 4.0 * s) * inv;
  return -2.0 * (3.0 - s) * inv;
}

// Cubic B-spline attached to knot index i, supported on [x_{i-2}, x_{i+2}].
// Piecewise in s = (x - x_{i-2}) / h, written so both halves mirror:
//   s^3 on [0,1],  1 + 3u + 3u^2 - 3u^3 (u = s-1) on [1,2],
//   the same in v = 3-s on [2,3],  (4-s)^3 on [3,4].
inline double cubic_eval(int i, double x, const UniformGrid& grid) {
  const double s = (x - grid.node(i - 2)) / grid.spacing;
  if (s <= 0.0 || s >= 4.0) return 0.0;
  if (s <= 1.0) return s * s * s;
  if (s <= 2.0) {
    const double u = s - 1.0;
    return 1.0 + u * (3.0 + u * (3.0 - 3.0 * u));
  }
  if (s <= 3.0) {
    const double v = 3.0 - s;
    return 1.0 + v * (3.0 + v * (3.0 - 3.0 * v));
  }
  const double w = 4.0 - s;
  return w * w * w;
}

inline double cubic_deriv1(int i, double x, const UniformGrid& grid) {
  const double s = (x - grid.node(i - 2)) / grid.spacing;
  if (s <= 0.0 || s >= 4.0) return 0.0;
  const double inv = 1.0 / grid.spacing;
  if (s <= 1.0) return 3.0 * s * s * inv;
  if (s <= 2.0) {
    const double u = s - 1.0;
    return (3.0 + u * (6.0 - 9.0 * u)) * inv;
  }
  if (s <= 3.0) {
    const double v = 3.0 - s;
    return -(3.0 + v * (6.0 - 9.0 * v)) * inv;
  }
  const double w = 4.0 - s;
  return -3.0 * w * w * inv;
}

inline double cubic_deriv2(int i, double x, const UniformGrid& grid) {
  const double s = (x - grid.node(i - 2)) / grid.spacing;
  if (s <= 0.0 || s >= 4.0) return 0.0;
  const double inv2 = 1.0 / (grid.spacing * grid.spacing);
  if (s <= 1.0) return 6.0 * s * inv2;
  if (s <= 2.0) return (6.0 - 18.0 * (s - 1.0)) * inv2;
  if (s <= 3.0) return (6.0 - 18.0 * (3.0 - s)) * inv2;
  return 6.0 * (4.0 - s) * inv2;
}

}  // namespace stbs::basis
