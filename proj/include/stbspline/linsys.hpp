#pragma once

// Tridiagonal solves for the collocation systems. The node rows couple each
// amplitude to its two neighbours; the two ghost amplitudes outside the
// domain are eliminated against the boundary rows first (condensation) and
// recovered by back-substitution afterwards.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "stbspline/errors.hpp"

namespace stbs::linsys {

struct TridiagonalSystem {
  std::vector<double> sub;   // below the diagonal, length size()-1
  std::vector<double> diag;  // length size()
  std::vector<double> sup;   // above the diagonal, length size()-1
  std::vector<double> rhs;   // length size()

  std::size_t size() const { return diag.size(); }
};

// Thomas elimination without pivoting. The input is left untouched. A pivot
// whose magnitude falls below 1e-14 times the scale of its row is reported as
// a breakdown together with the row index.
inline std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
  const std::size_t n = sys.size();
  if (n == 0) throw std::invalid_argument("thomas_solve: empty system");
  if (sys.sub.size() + 1 != n || sys.sup.size() + 1 != n || sys.rhs.size() != n)
    throw std::invalid_argument("thomas_solve: band lengths do not match the diagonal");

  const auto pivot_floor = [&sys, n](std::size_t row) {
    double scale = std::abs(sys.diag[row]);
    if (row > 0) scale = std::max(scale, std::abs(sys.sub[row - 1]));
    if (row + 1 < n) scale = std::max(scale, std::abs(sys.sup[row]));
    return 1e-14 * std::max(scale, std::numeric_limits<double>::min());
  };
  const auto breakdown = [](std::size_t row) {
    throw singular_system_error("thomas_solve: vanishing pivot in row " + std::to_string(row));
  };

  std::vector<double> diag(sys.diag);
  std::vector<double> rhs(sys.rhs);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(diag[i - 1]) < pivot_floor(i - 1)) breakdown(i - 1);
    const double w = sys.sub[i - 1] / diag[i - 1];
    diag[i] -= w * sys.sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  if (std::abs(diag[n - 1]) < pivot_floor(n - 1)) breakdown(n - 1);

  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (rhs[i] - sys.sup[i] * x[i + 1]) / diag[i];
  return x;
}

// Node rows of a condensable system: row i couples amplitudes i-1, i, i+1,
// and i runs over the grid nodes 0..m. Row 0 touches the left ghost, row m
// the right ghost.
struct InteriorRows {
  std::vector<double> left;
  std::vector<double> center;
  std::vector<double> right;
  std::vector<double> rhs;

  explicit InteriorRows(std::size_t rows) : left(rows), center(rows), right(rows), rhs(rows) {}
  std::size_t size() const { return center.size(); }
};

// ghost * sigma_ghost + near * sigma_near + far * sigma_far = value, where
// "near" is the boundary node and "far" its interior neighbour.
struct BoundaryRow {
  double ghost = 1.0;
  double near = 4.0;
  double far = 1.0;
  double value = 0.0;
};

struct CondensationRecord {
  BoundaryRow left_row;
  BoundaryRow right_row;
};

// Eliminate the two ghost amplitudes, solve the resulting m+1 node system,
// and back-substitute. Returns the full amplitude vector of length m+3,
// ordered ghost, node 0..m, ghost.
inline std::vector<double> condense_and_solve(const InteriorRows& rows, const CondensationRecord& rec) {
  const std::size_t n = rows.size();
  if (n < 2) throw std::invalid_argument("condense_and_solve: need at least two node rows");
  if (rows.left.size() != n || rows.right.size() != n || rows.rhs.size() != n)
    throw std::invalid_argument("condense_and_solve: node row arrays disagree in length");
  if (rec.left_row.ghost == 0.0 || rec.right_row.ghost == 0.0)
    throw std::invalid_argument("condense_and_solve: boundary row does not involve its ghost");

  TridiagonalSystem sys;
  sys.sub.assign(n - 1, 0.0);
  sys.sup.assign(n - 1, 0.0);
  sys.diag.assign(n, 0.0);
  sys.rhs.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    sys.diag[i] = rows.center[i];
    sys.rhs[i] = rows.rhs[i];
  }
  for (std::size_t i = 1; i < n; ++i) sys.sub[i - 1] = rows.left[i];
  for (std::size_t i = 0; i + 1 < n; ++i) sys.sup[i] = rows.right[i];

  const BoundaryRow& lb = rec.left_row;
  const BoundaryRow& rb = rec.right_row;
  sys.diag[0] -= rows.left[0] * (lb.near / lb.ghost);
  sys.sup[0] -= rows.left[0] * (lb.far / lb.ghost);
  sys.rhs[0] -= rows.left[0] * (lb.value / lb.ghost);
  sys.diag[n - 1] -= rows.right[n - 1] * (rb.near / rb.ghost);
  sys.sub[n - 2] -= rows.right[n - 1] * (rb.far / rb.ghost);
  sys.rhs[n - 1] -= rows.right[n - 1] * (rb.value / rb.ghost);

  const std::vector<double> inner = thomas_solve(sys);

  std::vector<double> full(n + 2);
  std::copy(inner.begin(), inner.end(), full.begin() + 1);
  full.front() = (lb.value - lb.near * inner[0] - lb.far * inner[1]) / lb.ghost;
  full.back() = (rb.value - rb.near * inner[n - 1] - rb.far * inner[n - 2]) / rb.ghost;
  return full;
}

}  // namespace stbs::linsys
