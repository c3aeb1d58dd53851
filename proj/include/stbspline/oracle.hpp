#pragma once

// Reference solver: Crank-Nicolson in time with centered second-order space
// differences on the same nodes, linearized the same way (lagged new-level
// slope, midpoint refresh between passes). It shares only the tridiagonal
// solve with the spline stepper, so agreement between the two is evidence
// rather than an echo.

#include <cmath>
#include <string>
#include <vector>

#include "stbspline/errors.hpp"
#include "stbspline/linsys.hpp"
#include "stbspline/problems.hpp"
#include "stbspline/stepper.hpp"

namespace stbs::oracle {

struct FdProfile {
  double time = 0.0;
  int step = 0;
  std::vector<double> values;
};

// March the finite-difference scheme from the problem start to t_end and
// return every level, including the initial one.
inline std::vector<FdProfile> cn_fd_run(const problems::ProblemSpec& problem, double h, double dt,
                                        double t_end, int inner_iterations = 2) {
  problem.validate();
  if (!(h > 0.0) || !(dt > 0.0)) throw config_error("cn_fd_run: increments must be positive");
  if (inner_iterations < 1) throw config_error("cn_fd_run: need at least one pass");
  const int m = stepper::checked_multiple(problem.b - problem.a, h, "the domain length");
  if (m < 3) throw config_error("cn_fd_run: h leaves fewer than three cells");
  const int steps = stepper::checked_multiple(t_end - problem.t_start, dt, "the run interval");

  std::vector<double> v(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    v[static_cast<std::size_t>(i)] = problem.ic(problem.a + i * h);

  std::vector<FdProfile> out;
  out.push_back({problem.t_start, 0, v});

  const double nu = problem.viscosity;
  const double r = nu * dt / (2.0 * h * h);
  for (int s = 1; s <= steps; ++s) {
    const double t1 = problem.t_start + s * dt;
    const double bl = problem.bc_left(t1);
    const double br = problem.bc_right(t1);

    std::vector<double> lagged = v;
    std::vector<double> next = v;
    for (int pass = 0; pass < inner_iterations; ++pass) {
      linsys::TridiagonalSystem sys;
      const std::size_t inner = static_cast<std::size_t>(m) - 1;
      sys.sub.assign(inner - 1, -r);
      sys.sup.assign(inner - 1, -r);
      sys.diag.assign(inner, 0.0);
      sys.rhs.assign(inner, 0.0);
      for (int i = 1; i < m; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const double slope = (v[k + 1] - v[k - 1]) / (2.0 * h);
        const double lag_slope = (lagged[k + 1] - lagged[k - 1]) / (2.0 * h);
        const double second = v[k - 1] - 2.0 * v[k] + v[k + 1];
        sys.diag[k - 1] = 1.0 + 0.5 * dt * lag_slope + 2.0 * r;
        sys.rhs[k - 1] = v[k] - 0.5 * dt * v[k] * slope + r * second;
      }
      sys.rhs[0] += r * bl;
      sys.rhs[inner - 1] += r * br;

      std::vector<double> w;
      try {
        w = linsys::thomas_solve(sys);
      } catch (const singular_system_error& e) {
        throw solver_error(std::string(e.what()) + " in the reference solver at step " +
                           std::to_string(s));
      }
      next.front() = bl;
      next.back() = br;
      for (int i = 1; i < m; ++i) next[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i - 1)];
      if (pass + 1 < inner_iterations)
        for (std::size_t k = 0; k < lagged.size(); ++k) lagged[k] = 0.5 * (v[k] + next[k]);
    }
    for (double val : next)
      if (!std::isfinite(val))
        throw solver_error("cn_fd_run: non-finite value at step " + std::to_string(s));
    v = std::move(next);
    out.push_back({t1, s, v});
  }
  return out;
}

}  // namespace stbs::oracle
