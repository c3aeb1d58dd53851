#pragma once

// Time advancement. Each step assembles the linearized collocation rows for
// the next level's amplitudes, condenses the boundary rows, and runs a fixed
// number of relaxation passes in which the lagged new-level slope is replaced
// by the midpoint of the old level and the freshest solve.
//
// Two reconstruction modes are supported. In the summed mode the reported
// solution at level j is the sum of two consecutive amplitude levels, which
// is what the quadratic-in-time expansion evaluates to at a knot; the
// boundary rows then constrain the sum. The direct mode reads a single level
// as the solution and pins that level to the boundary data.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stbspline/basis.hpp"
#include "stbspline/errors.hpp"
#include "stbspline/field.hpp"
#include "stbspline/linsys.hpp"
#include "stbspline/metrics.hpp"
#include "stbspline/problems.hpp"

namespace stbs::stepper {

using basis::UniformGrid;
using field::CoefficientVector;

enum class Mode { summed, direct };
enum class InitStrategy { pde_derivative, symmetric };

inline const char* mode_name(Mode m) { return m == Mode::summed ? "summed" : "direct"; }
inline const char* init_name(InitStrategy s) {
  return s == InitStrategy::pde_derivative ? "pde-derivative" : "symmetric";
}

// offset / delta as a checked nonnegative integer. Accepts a few ulp of
// rounding in the quotient and rejects everything else.
inline int checked_multiple(double offset, double delta, const std::string& what) {
  const double r = offset / delta;
  if (!(r >= -0.5) || r > 2.1e9) throw config_error(what + " does not fit the grid");
  const double k = std::round(r);
  const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(r));
  if (std::abs(r - k) > tol)
    throw config_error(what + " is not a whole number of increments");
  return static_cast<int>(k);
}

struct SolverConfig {
  double viscosity = 0.01;
  double h = 0.01;
  double dt = 0.01;
  double t_start = 0.0;
  double t_end = 1.0;
  int inner_iterations = 2;
  Mode mode = Mode::summed;
  InitStrategy init = InitStrategy::pde_derivative;
  metrics::L2Weighting l2_weighting = metrics::L2Weighting::unweighted;

  void validate() const {
    if (!(viscosity > 0.0)) throw config_error("viscosity must be positive");
    if (!(h > 0.0)) throw config_error("h must be positive");
    if (!(dt > 0.0)) throw config_error("dt must be positive");
    if (!(t_end > t_start)) throw config_error("t_end must exceed t_start");
    if (inner_iterations < 1) throw config_error("inner_iterations must be at least 1");
    checked_multiple(t_end - t_start, dt, "the run interval");
  }

  int step_count() const { return checked_multiple(t_end - t_start, dt, "the run interval"); }
};

// Two consecutive amplitude levels plus the step clock. time is always
// t_start + step * dt.
struct SolverState {
  CoefficientVector prev;
  CoefficientVector curr;
  int step = 0;
  double time = 0.0;
};

// The solution profile a state reports at the grid nodes.
inline std::vector<double> nodal_profile(const SolverState& state, Mode mode) {
  const int m = state.curr.max_node();
  std::vector<double> u(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    double v = field::eval_nodal(state.curr, i).value;
    if (mode == Mode::summed) v += field::eval_nodal(state.prev, i).value;
    u[static_cast<std::size_t>(i)] = v;
  }
  return u;
}

// Boundary rows sigma_ghost + 4 sigma_end + sigma_next = value for the new
// level. The summed mode subtracts the current level's end value so that the
// reported sum meets the boundary data exactly; the direct mode pins the new
// level itself to the data.
inline linsys::CondensationRecord apply_boundary(const SolverState& state, double bc_left,
                                                 double bc_right, Mode mode) {
  double vl = bc_left;
  double vr = bc_right;
  if (mode == Mode::summed) {
    vl -= field::eval_nodal(state.curr, 0).value;
    vr -= field::eval_nodal(state.curr, state.curr.max_node()).value;
  }
  linsys::CondensationRecord rec;
  rec.left_row = {1.0, 4.0, 1.0, vl};
  rec.right_row = {1.0, 4.0, 1.0, vr};
  return rec;
}

// Node rows of the linearized step. Writing delta for the current level's
// nodal value and slope and lag for the lagged new-level slope, row i is
//   (A - C - D) sigma_{i-1} + (4A + 2D) sigma_i + (A + C - D) sigma_{i+1} = r
// with A = 1 + (dt/2)(delta_x + lag_x), C = (3 dt / 2h) delta,
// D = 3 nu dt / h^2, and r = delta - (dt/2) delta delta_x + (nu dt/2) delta_xx.
inline std::pair<linsys::InteriorRows, linsys::CondensationRecord> assemble_step(
    const SolverState& state, const CoefficientVector& lagged, const SolverConfig& cfg,
    double bc_left, double bc_right) {
  if (!(state.curr.grid() == lagged.grid()))
    throw std::invalid_argument("assemble_step: lagged level lives on another grid");
  const UniformGrid& g = state.curr.grid();
  const int m = g.interior_count;
  const double h = g.spacing;
  const double dt = cfg.dt;
  const double diffuse = 3.0 * cfg.viscosity * dt / (h * h);

  linsys::InteriorRows rows(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    const field::NodalTriple now = field::eval_nodal(state.curr, i);
    const field::NodalTriple lag = field::eval_nodal(lagged, i);
    const double value_factor = 1.0 + 0.5 * dt * (now.d1 + lag.d1);
    const double convect = 1.5 * dt / h * now.value;
    const std::size_t k = static_cast<std::size_t>(i);
    rows.left[k] = value_factor - convect - diffuse;
    rows.center[k] = 4.0 * value_factor + 2.0 * diffuse;
    rows.right[k] = value_factor + convect - diffuse;
    rows.rhs[k] = now.value - 0.5 * dt * now.value * now.d1 + 0.5 * cfg.viscosity * dt * now.d2;
    if (!std::isfinite(rows.rhs[k]) || !std::isfinite(rows.center[k]))
      throw solver_error("assemble_step: non-finite coefficient at step " +
                         std::to_string(state.step) + ", node " + std::to_string(i));
  }
  return {std::move(rows), apply_boundary(state, bc_left, bc_right, cfg.mode)};
}

// One full time step: inner_iterations linearized solves with midpoint
// refresh of the lagged slope between passes.
inline SolverState advance(const SolverState& state, const SolverConfig& cfg,
                           const problems::ProblemSpec& problem) {
  const double t_next = cfg.t_start + (state.step + 1) * cfg.dt;
  const double bl = problem.bc_left(t_next);
  const double br = problem.bc_right(t_next);
  const UniformGrid& g = state.curr.grid();

  CoefficientVector lagged = state.curr;
  CoefficientVector solved = state.curr;
  for (int pass = 0; pass < cfg.inner_iterations; ++pass) {
    auto [rows, rec] = assemble_step(state, lagged, cfg, bl, br);
    try {
      solved = CoefficientVector(g, linsys::condense_and_solve(rows, rec));
    } catch (const singular_system_error& e) {
      throw solver_error(std::string(e.what()) + " while advancing to step " +
                         std::to_string(state.step + 1));
    }
    if (pass + 1 < cfg.inner_iterations)
      lagged = field::linear_combine(0.5, state.curr, 0.5, solved);
  }
  return {state.curr, std::move(solved), state.step + 1, t_next};
}

// Starting amplitude levels from the problem's initial data. The base fit
// interpolates the initial profile with the exact end slopes. The
// pde-derivative strategy splits the fit across the two levels using the
// initial time derivative, recovered from the equation, so that both the
// value and the rate are matched at t_start; the symmetric strategy drops
// the rate term. The direct mode starts both levels at the full fit.
inline SolverState initialize(const problems::ProblemSpec& problem, const SolverConfig& cfg) {
  cfg.validate();
  problem.validate();
  if (std::abs(cfg.t_start - problem.t_start) >
      1e-12 * std::max(1.0, std::abs(problem.t_start)))
    throw config_error("solver start time disagrees with the problem start time");

  const int m = checked_multiple(problem.b - problem.a, cfg.h, "the domain length");
  if (m < 4) throw config_error("h leaves fewer than four cells in the domain");
  const UniformGrid grid(problem.a, cfg.h, m, 3);

  std::vector<double> f(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) f[static_cast<std::size_t>(i)] = problem.ic(grid.node(i));
  const double t0 = problem.t_start;
  const CoefficientVector base =
      field::fit_initial(f, problem.bc_left_deriv(t0), problem.bc_right_deriv(t0), grid);

  if (cfg.mode == Mode::direct) {
    return {base, base, 0, t0};
  }
  if (cfg.init == InitStrategy::symmetric) {
    const CoefficientVector half = field::linear_combine(0.5, base, 0.0, base);
    return {half, half, 0, t0};
  }

  std::vector<double> g(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    g[static_cast<std::size_t>(i)] = problem.time_deriv(grid.node(i), t0);
  const double eps = 1e-6 * std::max(1.0, std::abs(t0));
  const auto slope_rate = [&](double x) {
    return (problem.exact_x(x, t0 + eps) - problem.exact_x(x, t0 - eps)) / (2.0 * eps);
  };
  const CoefficientVector rate = field::fit_initial(g, slope_rate(problem.a), slope_rate(problem.b), grid);

  return {field::linear_combine(0.5, base, -0.25 * cfg.dt, rate),
          field::linear_combine(0.5, base, 0.25 * cfg.dt, rate), 0, t0};
}

// One recorded solution profile.
struct TimedProfile {
  double time = 0.0;
  int step = 0;
  std::vector<double> values;
};

// Run the full configured interval and record the nodal profile at each
// requested sample time. Sample times must land on time grid points inside
// the run interval; t_start itself is allowed.
inline std::vector<TimedProfile> run(const problems::ProblemSpec& problem, const SolverConfig& cfg,
                                     std::span<const double> sample_times) {
  const int steps = cfg.step_count();
  std::set<int> wanted;
  for (double ts : sample_times) {
    const int k = checked_multiple(ts - cfg.t_start, cfg.dt, "sample time " + std::to_string(ts));
    if (k > steps)
      throw config_error("sample time " + std::to_string(ts) + " lies past the end of the run");
    wanted.insert(k);
  }

  SolverState state = initialize(problem, cfg);
  std::vector<TimedProfile> out;
  const auto record = [&]() {
    if (wanted.count(state.step))
      out.push_back({state.time, state.step, nodal_profile(state, cfg.mode)});
  };
  record();
  for (int s = 0; s < steps; ++s) {
    state = advance(state, cfg, problem);
    record();
  }
  return out;
}

}  // namespace stbs::stepper
