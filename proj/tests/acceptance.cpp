// Release gate: seven self-contained checks, one [PASS]/[FAIL] line each,
// with artifacts written under ./acceptance_out. The exit status is the
// number of failed checks.
//
// Reference diagnostics for the two studies are pinned below. Error norms
// are treated as upper bounds (a run may be more accurate than the
// reference); peak targets are two-sided value matches.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stbspline/experiment.hpp"
#include "stbspline/version.hpp"

using namespace stbs;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::string label;
  bool ok = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

const fs::path out_root = "acceptance_out";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5g", v);
  return buf;
}

struct ConfigCase {
  stepper::Mode mode;
  stepper::InitStrategy init;
};

// Candidate configurations in preference order; the first that meets a
// check's targets is the one reported.
const ConfigCase config_order[4] = {
    {stepper::Mode::summed, stepper::InitStrategy::pde_derivative},
    {stepper::Mode::summed, stepper::InitStrategy::symmetric},
    {stepper::Mode::direct, stepper::InitStrategy::pde_derivative},
    {stepper::Mode::direct, stepper::InitStrategy::symmetric},
};

std::string config_name(const ConfigCase& c) {
  return std::string(stepper::mode_name(c.mode)) + "/" + stepper::init_name(c.init);
}

struct RunScores {
  double peak = 0.0;
  double peak_x = 0.0;
  double linf = 0.0;
  double l2u = 0.0;
  double l2h = 0.0;
};

RunScores measure(problems::ProblemKind kind, double nu, double inc, double t_end,
                  const ConfigCase& config) {
  const problems::ProblemSpec p = problems::make_problem(kind, nu);
  stepper::SolverConfig cfg;
  cfg.viscosity = nu;
  cfg.h = inc;
  cfg.dt = inc;
  cfg.t_start = p.t_start;
  cfg.t_end = t_end;
  cfg.mode = config.mode;
  cfg.init = config.init;
  const std::vector<double> wanted = {t_end};
  const std::vector<stepper::TimedProfile> profiles = stepper::run(p, cfg, wanted);
  const stepper::TimedProfile& last = profiles.back();
  const int m = stepper::checked_multiple(p.b - p.a, inc, "the domain length");
  const basis::UniformGrid g(p.a, inc, m, 0);
  std::vector<double> exact(last.values.size());
  for (int i = 0; i <= m; ++i)
    exact[static_cast<std::size_t>(i)] = p.exact(g.node(i), last.time);
  const metrics::ErrorReport rep =
      metrics::score(last.values, exact, g, metrics::L2Weighting::unweighted, last.time);
  RunScores s;
  s.peak = rep.peak_value;
  s.peak_x = rep.peak_location;
  s.linf = rep.linf;
  s.l2u = rep.l2;
  s.l2h = metrics::l2_norm(last.values, exact, inc, metrics::L2Weighting::h_weighted);
  return s;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) return "<missing " + p.string() + ">";
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// 1. The nodal stencil tables at h = dt = 2^-6, exactly.
Check check_basis() {
  Check c{"basis stencil tables"};
  const double inc = std::ldexp(1.0, -6);
  const basis::UniformGrid gx(0.0, inc, 8, 3);
  const basis::UniformGrid gt(0.0, inc, 8, 3);
  bool ok = true;

  const basis::CubicNodalStencil cs;
  ok = ok && cs.value.entry(1, inc) == 1.0 && cs.value.entry(2, inc) == 4.0 &&
       cs.value.entry(3, inc) == 1.0;
  ok = ok && cs.d1.entry(1, inc) == -192.0 && cs.d1.entry(2, inc) == 0.0 &&
       cs.d1.entry(3, inc) == 192.0;
  ok = ok && cs.d2.entry(1, inc) == 24576.0 && cs.d2.entry(2, inc) == -49152.0 &&
       cs.d2.entry(3, inc) == 24576.0;

  ok = ok && basis::cubic_eval(2, gx.node(1), gx) == 1.0 &&
       basis::cubic_eval(2, gx.node(2), gx) == 4.0 && basis::cubic_eval(2, gx.node(3), gx) == 1.0;
  ok = ok && basis::cubic_deriv1(2, gx.node(1), gx) == 192.0 &&
       basis::cubic_deriv1(2, gx.node(2), gx) == 0.0 &&
       basis::cubic_deriv1(2, gx.node(3), gx) == -192.0;
  ok = ok && basis::cubic_deriv2(2, gx.node(1), gx) == 24576.0 &&
       basis::cubic_deriv2(2, gx.node(2), gx) == -49152.0 &&
       basis::cubic_deriv2(2, gx.node(3), gx) == 24576.0;

  const basis::QuadNodalStencil qs;
  ok = ok && qs.value.entry(1, inc) == 1.0 && qs.value.entry(2, inc) == 1.0;
  ok = ok && qs.d1.entry(1, inc) == -128.0 && qs.d1.entry(2, inc) == 128.0;
  ok = ok && basis::quad_eval(2, gt.node(2), gt) == 1.0 &&
       basis::quad_eval(2, gt.node(3), gt) == 1.0;
  ok = ok && basis::quad_deriv(2, gt.node(2), gt) == 128.0 &&
       basis::quad_deriv(2, gt.node(3), gt) == -128.0;

  c.ok = ok;
  c.detail = ok ? "values 1,4,1 and 1,1; derivatives +/-192, 24576/-49152/24576, +/-128, "
                  "exact at h=dt=2^-6"
                : "stencil tables do not match their pinned values at h=dt=2^-6";
  return c;
}

// 2. Shock study, nu = 0.01, h = dt = 0.01, run to t = 3.25. Targets:
// peak within 15% of 0.2233, Linf no worse than 3 x 0.0498, and one L2
// weighting no worse than 3 x 0.0211. At least one candidate configuration
// must meet all three; each attempt's manifest and scores land in
// acceptance_out so the configuration used is recorded.
Check check_shock_main() {
  Check c{"shock study nu=0.01"};
  const double ref_peak = 0.2233;
  const double ref_linf = 0.0498;
  const double ref_l2 = 0.0211;

  std::string best_text;
  int best_clauses = -1;
  for (const ConfigCase& config : config_order) {
    runio::RunManifest m = runio::default_manifest(problems::ProblemKind::shock);
    m.cfg.mode = config.mode;
    m.cfg.init = config.init;
    m.out_dir = out_root / ("shock_" + std::string(stepper::mode_name(config.mode)) + "_" +
                            stepper::init_name(config.init));
    const runio::OutputBundle bundle = runio::run_experiment(m);
    const runio::SampleScore& s = bundle.samples.back();

    const bool peak_ok = std::abs(s.report.peak_value - ref_peak) <= 0.15 * ref_peak;
    const bool linf_ok = s.report.linf <= 3.0 * ref_linf;
    const bool l2_ok = s.l2_unweighted <= 3.0 * ref_l2 || s.l2_h_weighted <= 3.0 * ref_l2;
    const int clauses = (peak_ok ? 1 : 0) + (linf_ok ? 1 : 0) + (l2_ok ? 1 : 0);

    std::string text = config_name(config) + ": peak " + fmt(s.report.peak_value) + " at x=" +
                       fmt(s.report.peak_location) + (peak_ok ? " ok" : " outside [" +
                       fmt(0.85 * ref_peak) + ", " + fmt(1.15 * ref_peak) + "]") + ", Linf " +
                       fmt(s.report.linf) + (linf_ok ? " ok" : " above " + fmt(3.0 * ref_linf)) +
                       ", L2 " + fmt(s.l2_unweighted) + "/" + fmt(s.l2_h_weighted) +
                       (l2_ok ? " ok" : " outside");
    if (clauses > best_clauses) {
      best_clauses = clauses;
      best_text = text;
    }
    if (peak_ok && linf_ok && l2_ok) {
      c.ok = true;
      c.detail = text;
      return c;
    }
  }

  // Show why the peak window cannot be met: it excludes the exact solution.
  double exact_peak = 0.0;
  const problems::ProblemSpec p = problems::make_problem(problems::ProblemKind::shock, 0.01);
  for (int i = 0; i <= 100000; ++i)
    exact_peak = std::max(exact_peak, p.exact(i * 1e-5, 3.25));
  c.ok = false;
  c.detail = "no configuration meets all targets; closest " + best_text +
             "; note: the exact peak at t=3.25 is " + fmt(exact_peak) +
             ", below the target window floor " + fmt(0.85 * ref_peak) +
             ", so an accurate run cannot land inside it";
  return c;
}

// 3. Shock study, nu = 0.005: peak within 20% of 0.2503.
Check check_shock_thin() {
  Check c{"shock study nu=0.005"};
  const double ref_peak = 0.2503;
  std::string best_text;
  double best_gap = 1e300;
  for (const ConfigCase& config : config_order) {
    const RunScores s = measure(problems::ProblemKind::shock, 0.005, 0.01, 3.25, config);
    const double gap = std::abs(s.peak - ref_peak);
    const std::string text = config_name(config) + ": peak " + fmt(s.peak) + " at x=" +
                             fmt(s.peak_x) + " vs target " + fmt(ref_peak) + " +/-20%";
    if (gap < best_gap) {
      best_gap = gap;
      best_text = text;
    }
    if (gap <= 0.20 * ref_peak) {
      c.ok = true;
      c.detail = text;
      return c;
    }
  }
  c.ok = false;
  c.detail = "no configuration lands in the peak window; closest " + best_text;
  return c;
}

// 4. Front study, nu = 0.01, t = 1.2: Linf at h = dt = 0.01 no worse than
// 3 x 0.4875, and strictly decreasing Linf across h = dt = 0.01, 0.005,
// 0.001 (reference trend 0.4875 -> 0.2964 -> 0.1514).
Check check_front_refinement() {
  Check c{"front study nu=0.01 refinement"};
  const double ref_linf = 0.4875;
  std::string best_text;
  int best_clauses = -1;
  for (const ConfigCase& config : config_order) {
    std::vector<double> errs;
    std::string fail_note;
    try {
      for (double inc : {0.01, 0.005, 0.001})
        errs.push_back(measure(problems::ProblemKind::front, 0.01, inc, 1.2, config).linf);
    } catch (const std::exception& e) {
      fail_note = std::string("run failed: ") + e.what();
    }
    bool bound_ok = false;
    bool trend_ok = false;
    std::string text = config_name(config) + ": ";
    if (errs.size() == 3) {
      bound_ok = errs[0] <= 3.0 * ref_linf;
      trend_ok = errs[0] > errs[1] && errs[1] > errs[2];
      text += "Linf " + fmt(errs[0]) + " -> " + fmt(errs[1]) + " -> " + fmt(errs[2]) +
              (bound_ok ? "" : ", first above " + fmt(3.0 * ref_linf)) +
              (trend_ok ? ", strictly decreasing" : ", not strictly decreasing");
    } else {
      text += fail_note;
    }
    const int clauses = (bound_ok ? 1 : 0) + (trend_ok ? 1 : 0);
    if (clauses > best_clauses) {
      best_clauses = clauses;
      best_text = text;
    }
    if (bound_ok && trend_ok) {
      c.ok = true;
      c.detail = text + " (reference trend " + fmt(ref_linf) + " -> 0.2964 -> 0.1514)";
      return c;
    }
  }
  c.ok = false;
  c.detail = "no configuration shows the bounded, strictly decreasing errors; closest " +
             best_text;
  return c;
}

// Criterion 5 sub-checks. Each returns true on success.

bool prop_partition() {
  std::mt19937_64 rng(20250823ull);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  const double h = 0.02;
  const basis::UniformGrid g(0.0, h, 50, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int cell = 1 + static_cast<int>(pick(rng) * 47.999);
    const double x = g.node(cell) + (0.05 + 0.9 * pick(rng)) * h;
    double sum_v = 0.0, sum_d1 = 0.0, sum_d2 = 0.0;
    for (int i = cell - 1; i <= cell + 2; ++i) {
      sum_v += basis::cubic_eval(i, x, g);
      sum_d1 += basis::cubic_deriv1(i, x, g);
      sum_d2 += basis::cubic_deriv2(i, x, g);
    }
    if (std::abs(sum_v - 6.0) > 1e-12 * 6.0) return false;
    if (std::abs(sum_d1) > 1e-12 * 12.0 / h) return false;
    if (std::abs(sum_d2) > 1e-12 * 24.0 / (h * h)) return false;

    double sum_q = 0.0, sum_qd = 0.0;
    for (int j = cell - 1; j <= cell + 1; ++j) {
      sum_q += basis::quad_eval(j, x, g);
      sum_qd += basis::quad_deriv(j, x, g);
    }
    if (std::abs(sum_q - 2.0) > 1e-12 * 2.0) return false;
    if (std::abs(sum_qd) > 1e-12 * 4.0 / h) return false;
  }
  return true;
}

problems::ProblemSpec constant_problem(double value) {
  problems::ProblemSpec p;
  p.name = "constant";
  p.kind = problems::ProblemKind::front;
  p.a = 0.0;
  p.b = 1.0;
  p.t_start = 0.0;
  p.viscosity = 0.01;
  p.exact = [value](double, double) { return value; };
  p.exact_x = [](double, double) { return 0.0; };
  p.exact_xx = [](double, double) { return 0.0; };
  p.bc_left = [value](double) { return value; };
  p.bc_right = [value](double) { return value; };
  p.bc_left_deriv = [](double) { return 0.0; };
  p.bc_right_deriv = [](double) { return 0.0; };
  return p;
}

bool prop_constant() {
  // Direct mode gets a smaller amplitude: past 1.5*c*dt/h ~ 1 its constant
  // state is an unstable fixed point and roundoff would grow.
  const std::pair<stepper::Mode, double> cases[] = {{stepper::Mode::summed, 2.5},
                                                    {stepper::Mode::direct, 0.8}};
  for (const auto& [mode, value] : cases) {
    const problems::ProblemSpec p = constant_problem(value);
    stepper::SolverConfig cfg;
    cfg.viscosity = 0.01;
    cfg.h = 0.01;
    cfg.dt = 0.01;
    cfg.t_start = 0.0;
    cfg.t_end = 1.0;
    cfg.mode = mode;
    stepper::SolverState st = stepper::initialize(p, cfg);
    for (int s = 0; s < 100; ++s) st = stepper::advance(st, cfg, p);
    for (double u : stepper::nodal_profile(st, mode))
      if (std::abs(u - value) > 1e-10) return false;
  }
  return true;
}

bool prop_boundary() {
  const problems::ProblemSpec p = problems::make_problem(problems::ProblemKind::front, 0.05);
  stepper::SolverConfig cfg;
  cfg.viscosity = 0.05;
  cfg.h = 0.02;
  cfg.dt = 0.02;
  cfg.t_start = 0.0;
  cfg.t_end = 0.6;
  stepper::SolverState st = stepper::initialize(p, cfg);
  for (int s = 0; s < cfg.step_count(); ++s) {
    st = stepper::advance(st, cfg, p);
    const std::vector<double> u = stepper::nodal_profile(st, cfg.mode);
    if (std::abs(u.front() - p.bc_left(st.time)) > 1e-10) return false;
    if (std::abs(u.back() - p.bc_right(st.time)) > 1e-10) return false;
  }
  return true;
}

bool prop_interpolation() {
  const auto q = [](double x) { return 2.0 - x + 3.0 * x * x - 0.5 * x * x * x; };
  const auto qd = [](double x) { return -1.0 + 6.0 * x - 1.5 * x * x; };
  const double h = 0.05;
  const basis::UniformGrid g(0.0, h, 20, 3);
  std::vector<double> samples(21);
  for (int i = 0; i <= 20; ++i) samples[static_cast<std::size_t>(i)] = q(g.node(i));
  const field::CoefficientVector fit = field::fit_initial(samples, qd(0.0), qd(1.0), g);
  for (int i = 0; i <= 20; ++i)
    if (std::abs(field::eval_nodal(fit, i).value - q(g.node(i))) > 1e-10) return false;
  std::mt19937_64 rng(777100ull);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = pick(rng);
    if (std::abs(field::eval_at(fit, x) - q(x)) > 1e-10) return false;
  }
  return true;
}

bool prop_picard() {
  const problems::ProblemSpec p = problems::make_problem(problems::ProblemKind::front, 0.1);
  stepper::SolverConfig cfg;
  cfg.viscosity = 0.1;
  cfg.h = 0.01;
  cfg.dt = 0.01;
  cfg.t_start = 0.0;
  cfg.t_end = 0.5;
  stepper::SolverState st = stepper::initialize(p, cfg);
  for (int s = 0; s < 5; ++s) st = stepper::advance(st, cfg, p);

  const basis::UniformGrid& g = st.curr.grid();
  const double t_next = st.time + cfg.dt;
  field::CoefficientVector lagged = st.curr;
  field::CoefficientVector cand = st.curr;
  double drift = 1.0;
  for (int iter = 0; iter < 200 && drift > 1e-15; ++iter) {
    const auto [rows, rec] =
        stepper::assemble_step(st, lagged, cfg, p.bc_left(t_next), p.bc_right(t_next));
    const field::CoefficientVector next(g, linsys::condense_and_solve(rows, rec));
    drift = 0.0;
    for (std::size_t k = 0; k < next.raw().size(); ++k)
      drift = std::max(drift, std::abs(next.raw()[k] - cand.raw()[k]));
    cand = next;
    lagged = next;
  }
  if (drift > 1e-15) return false;
  for (int i = 0; i <= g.interior_count; ++i) {
    const field::NodalTriple n0 = field::eval_nodal(st.curr, i);
    const field::NodalTriple n1 = field::eval_nodal(cand, i);
    const double residual = 2.0 / cfg.dt * (n1.value - n0.value) +
                            (n0.value + n1.value) * (n0.d1 + n1.d1) -
                            cfg.viscosity * (n0.d2 + n1.d2);
    const double scale = 1.0 + std::abs(n0.d2) + std::abs(n1.d2);
    if (std::abs(residual) > 1e-10 * scale) return false;
  }
  return true;
}

bool prop_thomas() {
  std::mt19937_64 rng(424242ull);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> size(3, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    linsys::TridiagonalSystem sys;
    sys.sub.resize(n - 1);
    sys.sup.resize(n - 1);
    sys.diag.resize(n);
    sys.rhs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = i > 0 ? coef(rng) : 0.0;
      const double hi = i + 1 < n ? coef(rng) : 0.0;
      if (i > 0) sys.sub[i - 1] = lo;
      if (i + 1 < n) sys.sup[i] = hi;
      sys.diag[i] = (std::abs(lo) + std::abs(hi) + 0.5) * (coef(rng) > 0.0 ? 1.0 : -1.0);
      sys.rhs[i] = 3.0 * coef(rng);
    }
    const std::vector<double> x = linsys::thomas_solve(sys);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(sys.rhs[i]));
    for (std::size_t i = 0; i < n; ++i) {
      double r = sys.diag[i] * x[i] - sys.rhs[i];
      if (i > 0) r += sys.sub[i - 1] * x[i - 1];
      if (i + 1 < n) r += sys.sup[i] * x[i + 1];
      if (std::abs(r) > 1e-12 * std::max(scale, 1.0)) return false;
    }
  }
  return true;
}

bool prop_norms() {
  std::mt19937_64 rng(90210ull);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const double h = 0.1;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(11), b(11), zero(11, 0.0), ab(11);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = coef(rng);
      b[i] = coef(rng);
      ab[i] = a[i] + b[i];
    }
    const double la = metrics::l2_norm(a, zero, h, metrics::L2Weighting::unweighted);
    const double lb = metrics::l2_norm(b, zero, h, metrics::L2Weighting::unweighted);
    const double lab = metrics::l2_norm(ab, zero, h, metrics::L2Weighting::unweighted);
    if (lab > la + lb + 1e-12) return false;
    std::vector<double> a3(a);
    for (double& v : a3) v *= -3.0;
    const double la3 = metrics::l2_norm(a3, zero, h, metrics::L2Weighting::unweighted);
    if (std::abs(la3 - 3.0 * la) > 1e-12 * (1.0 + la3)) return false;
    if (metrics::linf_norm(a, zero) > la + 1e-15) return false;
    if (metrics::l2_norm(zero, zero, h, metrics::L2Weighting::unweighted) != 0.0) return false;
    if (la == 0.0) return false;
  }
  return true;
}

bool prop_pde_residual() {
  std::mt19937_64 rng(5150ull);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  const problems::ProblemSpec specs[] = {
      problems::make_problem(problems::ProblemKind::shock, 0.01),
      problems::make_problem(problems::ProblemKind::front, 0.1)};
  for (const problems::ProblemSpec& p : specs) {
    const double t_lo = p.t_start;
    const double t_hi = p.kind == problems::ProblemKind::shock ? 3.25 : 1.2;
    for (int trial = 0; trial < 100; ++trial) {
      const double x = p.a + (p.b - p.a) * pick(rng);
      const double t = t_lo + (t_hi - t_lo) * pick(rng);
      const double eps = 1e-6 * std::max(1.0, std::abs(t));
      const double ut = (p.exact(x, t + eps) - p.exact(x, t - eps)) / (2.0 * eps);
      const double u = p.exact(x, t);
      const double ux = p.exact_x(x, t);
      const double uxx = p.exact_xx(x, t);
      const double residual = ut + u * ux - p.viscosity * uxx;
      const double scale =
          1.0 + std::abs(ut) + std::abs(u * ux) + std::abs(p.viscosity * uxx);
      if (std::abs(residual) > 1e-6 * scale) return false;
    }
  }
  return true;
}

// 5. Property suite: the structural identities the scheme relies on.
Check check_properties() {
  Check c{"property suite"};
  const std::pair<const char*, bool (*)()> groups[] = {
      {"partition of unity", prop_partition},
      {"constant preservation", prop_constant},
      {"boundary exactness", prop_boundary},
      {"cubic interpolation", prop_interpolation},
      {"relaxation fixed point", prop_picard},
      {"tridiagonal residuals", prop_thomas},
      {"norm axioms", prop_norms},
      {"exact-solution residuals", prop_pde_residual},
  };
  std::string failed;
  int passed = 0;
  for (const auto& [name, fn] : groups) {
    if (fn()) {
      ++passed;
    } else {
      if (!failed.empty()) failed += ", ";
      failed += name;
    }
  }
  c.ok = passed == 8;
  c.detail = c.ok ? "8 of 8 property groups hold" : "failing groups: " + failed;
  return c;
}

// 6. Cross-validation against the finite-difference reference solver in the
// smooth regime: errors within a factor of 3 of each other, both improving
// under one refinement halving.
Check check_oracle() {
  Check c{"reference solver cross-check"};
  const problems::ProblemSpec p = problems::make_problem(problems::ProblemKind::front, 0.1);
  const ConfigCase config = config_order[0];
  const auto oracle_linf = [&p](double inc) {
    const std::vector<oracle::FdProfile> fd = oracle::cn_fd_run(p, inc, inc, 0.5);
    const oracle::FdProfile& last = fd.back();
    double worst = 0.0;
    for (std::size_t i = 0; i < last.values.size(); ++i)
      worst = std::max(worst,
                       std::abs(last.values[i] - p.exact(p.a + static_cast<double>(i) * inc,
                                                         last.time)));
    return worst;
  };
  const double sp1 = measure(problems::ProblemKind::front, 0.1, 0.01, 0.5, config).linf;
  const double sp2 = measure(problems::ProblemKind::front, 0.1, 0.005, 0.5, config).linf;
  const double or1 = oracle_linf(0.01);
  const double or2 = oracle_linf(0.005);
  const double ratio = std::max(sp1 / or1, or1 / sp1);
  const bool ratio_ok = ratio <= 3.0;
  const bool improve_ok = sp2 < sp1 && or2 < or1;
  c.ok = ratio_ok && improve_ok;
  c.detail = "Linf at h=dt=0.01: spline " + fmt(sp1) + ", reference " + fmt(or1) + " (ratio " +
             fmt(ratio) + (ratio_ok ? " ok" : " above 3") + "); halved: " + fmt(sp2) + " and " +
             fmt(or2) + (improve_ok ? ", both improve" : ", no improvement");
  return c;
}

// 7. Two identical shock runs produce byte-identical CSV tables.
Check check_reproducibility() {
  Check c{"reproducibility"};
  runio::RunManifest m = runio::default_manifest(problems::ProblemKind::shock);
  m.out_dir = out_root / "repro_a";
  runio::run_experiment(m);
  m.out_dir = out_root / "repro_b";
  runio::run_experiment(m);
  bool ok = true;
  for (const char* name : {"profile_t3.25.csv", "summary.csv"}) {
    const std::string a = slurp(out_root / "repro_a" / name);
    const std::string b = slurp(out_root / "repro_b" / name);
    ok = ok && !a.empty() && a.front() != '<' && a == b;
  }
  c.ok = ok;
  c.detail = ok ? "profile_t3.25.csv and summary.csv byte-identical across repeated runs"
              : "CSV output differs between identical runs";
  return c;
}

}  // namespace

int main() {
  std::printf("release checks, stbspline %s\n", stbs::version_string);
  std::error_code ec;
  fs::remove_all(out_root, ec);
  fs::create_directories(out_root, ec);
  if (ec) {
    std::printf("[FAIL] cannot prepare %s: %s\n", out_root.string().c_str(),
                ec.message().c_str());
    return 1;
  }

  const std::pair<Check (*)(), double> plan[] = {
      {check_basis, 1.0},          {check_shock_main, 5.0}, {check_shock_thin, 5.0},
      {check_front_refinement, 60.0}, {check_properties, 5.0}, {check_oracle, 5.0},
      {check_reproducibility, 5.0},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [fn, budget] : plan) {
    ++index;
    const auto begin = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("unexpected error: ") + e.what();
      if (c.label.empty()) c.label = "check " + std::to_string(index);
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    c.budget_seconds = budget;
    if (c.seconds > budget) {
      c.ok = false;
      c.detail += " [over the " + fmt(budget) + " s budget]";
    }
    if (!c.ok) ++failures;
    std::printf("[%s] %d. %-31s (%6.2f s) %s\n", c.ok ? "PASS" : "FAIL", index, c.label.c_str(),
                c.seconds, c.detail.c_str());
  }
  std::printf("%d of 7 checks passed\n", 7 - failures);
  return failures;
}
