#pragma once

// Benchmark problems for the viscous Burgers equation u_t + u u_x = nu u_xx:
// a decaying shock pulse on [0,1] and a travelling wave front. Each carries
// the closed-form solution with first and second space derivatives, initial
// data, and Dirichlet boundary data.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "stbspline/errors.hpp"

namespace stbs::problems {

namespace detail {

// exp(z) / (1 + exp(z)), evaluated from the side that cannot overflow.
inline double logistic(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace detail

enum class ProblemKind { shock, front };

inline const char* kind_name(ProblemKind k) { return k == ProblemKind::shock ? "shock" : "front"; }

struct FrontParams {
  double alpha = 0.4;
  double mu = 0.6;
  double gamma = 0.125;
};

// The shock pulse u = (x/t) / (1 + sqrt(t/t0) exp(x^2 / 4 nu t)) with
// t0 = exp(1 / 8 nu). The two exponential factors are merged in log space:
// with zeta = x^2/(4 nu t) - 1/(16 nu) + ln(t)/2 the solution is
// (x/t) * logistic(-zeta), finite for any nu > 0.
inline double shock_log_factor(double x, double t, double nu) {
  return x * x / (4.0 * nu * t) - 1.0 / (16.0 * nu) + 0.5 * std::log(t);
}

inline double shock_reference_time(double nu) { return std::exp(1.0 / (8.0 * nu)); }

inline double shock_exact(double x, double t, double nu) {
  return (x / t) * detail::logistic(-shock_log_factor(x, t, nu));
}

// First and second x-derivatives of the shock pulse. With p = logistic(zeta),
// q = 1 - p, and zeta as above:
//   u_x  = q/t - (x/t) p q zeta_x
//   u_xx = -(2 p q zeta_x + x p q (q - p) zeta_x^2 + x p q zeta_xx) / t
// where zeta_x = x / (2 nu t) and zeta_xx = 1 / (2 nu t).
inline std::pair<double, double> shock_exact_derivs(double x, double t, double nu) {
  const double zeta = shock_log_factor(x, t, nu);
  const double p = detail::logistic(zeta);
  const double q = detail::logistic(-zeta);
  const double zx = x / (2.0 * nu * t);
  const double zxx = 1.0 / (2.0 * nu * t);
  const double pq = p * q;
  const double ux = q / t - (x / t) * pq * zx;
  const double uxx = -(2.0 * pq * zx + x * pq * (q - p) * zx * zx + x * pq * zxx) / t;
  return {ux, uxx};
}

// The travelling front u = mu - alpha tanh(eta/2), eta = alpha (x - mu t -
// gamma) / nu. tanh keeps the value bounded for any eta; the derivatives run
// through s(1-s) with s = logistic(eta), which underflows gracefully.
inline double front_phase(double x, double t, const FrontParams& p, double nu) {
  return p.alpha * (x - p.mu * t - p.gamma) / nu;
}

inline double front_exact(double x, double t, const FrontParams& p, double nu) {
  return p.mu - p.alpha * std::tanh(0.5 * front_phase(x, t, p, nu));
}

inline std::pair<double, double> front_exact_derivs(double x, double t, const FrontParams& p,
                                                    double nu) {
  const double eta = front_phase(x, t, p, nu);
  const double s = detail::logistic(eta);
  const double q = detail::logistic(-eta);
  const double sq = s * q;
  const double a2 = p.alpha * p.alpha;
  const double ux = -2.0 * a2 / nu * sq;
  const double uxx = -2.0 * a2 * p.alpha / (nu * nu) * sq * (q - s);
  return {ux, uxx};
}

// A fully specified run: domain, start time, viscosity, exact solution and
// derivatives, and boundary data.
struct ProblemSpec {
  std::string name;
  ProblemKind kind = ProblemKind::shock;
  double a = 0.0;
  double b = 1.0;
  double t_start = 0.0;
  double viscosity = 0.01;
  FrontParams params{};

  std::function<double(double, double)> exact;
  std::function<double(double, double)> exact_x;
  std::function<double(double, double)> exact_xx;
  std::function<double(double)> bc_left;
  std::function<double(double)> bc_right;
  std::function<double(double)> bc_left_deriv;
  std::function<double(double)> bc_right_deriv;

  double ic(double x) const { return exact(x, t_start); }

  // u_t recovered through the equation itself, valid wherever exact solves it.
  double time_deriv(double x, double t) const {
    return -exact(x, t) * exact_x(x, t) + viscosity * exact_xx(x, t);
  }

  void validate() const {
    if (!(b > a)) throw config_error("problem \"" + name + "\": domain is empty");
    if (!(viscosity > 0.0)) throw config_error("problem \"" + name + "\": viscosity must be positive");
    if (kind == ProblemKind::shock && !(t_start >= 1.0))
      throw config_error("problem \"shock\": start time must be at least 1");
    if (kind == ProblemKind::front && !(params.alpha > 0.0 && params.mu > 0.0))
      throw config_error("problem \"front\": alpha and mu must be positive");
    const double tol = 1e-8;
    if (std::abs(ic(a) - bc_left(t_start)) > tol || std::abs(ic(b) - bc_right(t_start)) > tol)
      throw config_error("problem \"" + name +
                         "\": initial data is incompatible with the boundary data");
  }
};

// Build one of the named problems. The shock uses homogeneous boundary
// values; the front takes its boundary data from the exact solution. A start
// time overrides the problem default (shock 1, front 0) and shifts the
// initial data accordingly.
inline ProblemSpec make_problem(ProblemKind kind, double nu, const FrontParams& params = {},
                                std::optional<double> t_start = std::nullopt) {
  ProblemSpec p;
  p.kind = kind;
  p.viscosity = nu;
  p.params = params;
  if (kind == ProblemKind::shock) {
    p.name = "shock";
    p.a = 0.0;
    p.b = 1.0;
    p.t_start = t_start.value_or(1.0);
    p.exact = [nu](double x, double t) { return shock_exact(x, t, nu); };
    p.exact_x = [nu](double x, double t) { return shock_exact_derivs(x, t, nu).first; };
    p.exact_xx = [nu](double x, double t) { return shock_exact_derivs(x, t, nu).second; };
    p.bc_left = [](double) { return 0.0; };
    p.bc_right = [](double) { return 0.0; };
    p.bc_left_deriv = [nu](double t) { return shock_exact_derivs(0.0, t, nu).first; };
    p.bc_right_deriv = [nu](double t) { return shock_exact_derivs(1.0, t, nu).first; };
  } else {
    p.name = "front";
    p.a = 0.0;
    p.b = 1.0;
    p.t_start = t_start.value_or(0.0);
    p.exact = [nu, params](double x, double t) { return front_exact(x, t, params, nu); };
    p.exact_x = [nu, params](double x, double t) {
      return front_exact_derivs(x, t, params, nu).first;
    };
    p.exact_xx = [nu, params](double x, double t) {
      return front_exact_derivs(x, t, params, nu).second;
    };
    p.bc_left = [nu, params](double t) { return front_exact(0.0, t, params, nu); };
    p.bc_right = [nu, params](double t) { return front_exact(1.0, t, params, nu); };
    p.bc_left_deriv = [nu, params](double t) {
      return front_exact_derivs(0.0, t, params, nu).first;
    };
    p.bc_right_deriv = [nu, params](double t) {
      return front_exact_derivs(1.0, t, params, nu).first;
    };
  }
  return p;
}

}  // namespace stbs::problems
