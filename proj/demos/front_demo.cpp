// Minimal library walkthrough: march the travelling front at nu = 0.1 and
// compare the reported profile with the closed form at the final time.

#include <cstdio>

#include "stbspline/metrics.hpp"
#include "stbspline/problems.hpp"
#include "stbspline/stepper.hpp"

int main() {
  using namespace stbs;

  stepper::SolverConfig cfg;
  cfg.viscosity = 0.1;
  cfg.h = 0.01;
  cfg.dt = 0.01;
  cfg.t_start = 0.0;
  cfg.t_end = 0.5;

  const problems::ProblemSpec problem =
      problems::make_problem(problems::ProblemKind::front, cfg.viscosity);

  stepper::SolverState state = stepper::initialize(problem, cfg);
  const int steps = cfg.step_count();
  for (int s = 0; s < steps; ++s) state = stepper::advance(state, cfg, problem);

  const std::vector<double> u = stepper::nodal_profile(state, cfg.mode);
  std::vector<double> exact(u.size());
  const basis::UniformGrid& grid = state.curr.grid();
  for (int i = 0; i <= grid.interior_count; ++i)
    exact[static_cast<std::size_t>(i)] = problem.exact(grid.node(i), state.time);

  const metrics::ErrorReport r =
      metrics::score(u, exact, grid, metrics::L2Weighting::unweighted, state.time);
  std::printf("front, nu=%.3g, h=dt=%.3g, t=%.3g\n", cfg.viscosity, cfg.h, state.time);
  std::printf("  Linf %.6g   L2 %.6g\n", r.linf, r.l2);
  std::printf("  profile midpoint u(0.5) = %.6g (exact %.6g)\n", u[u.size() / 2],
              exact[exact.size() / 2]);
  return 0;
}
