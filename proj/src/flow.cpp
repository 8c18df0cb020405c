#include "rqte/flow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rqte {

namespace {

constexpr int kStateMax = 4;  // t plus up to three spatial components

struct State {
  std::array<double, kStateMax> c{0.0, 0.0, 0.0, 0.0};
};

State to_state(const SpacetimePoint& p, int dim) {
  State s;
  s.c[0] = p.t;
  for (int j = 0; j < dim; ++j) s.c[1 + j] = p.x[j];
  return s;
}

SpacetimePoint to_point(const State& s, int dim) {
  SpacetimePoint p;
  p.t = s.c[0];
  for (int j = 0; j < dim; ++j) p.x[j] = s.c[1 + j];
  return p;
}

FlowVelocity to_velocity(const State& s, int dim) {
  FlowVelocity v;
  v.dt = s.c[0];
  for (int j = 0; j < dim; ++j) v.dx[j] = s.c[1 + j];
  return v;
}

State eval_field(const VelocityFieldSpec& field, const State& s, int dim) {
  const FlowVelocity v = field.velocity(to_point(s, dim));
  State d;
  d.c[0] = v.dt;
  for (int j = 0; j < dim; ++j) d.c[1 + j] = v.dx[j];
  return d;
}

State axpy(const State& y, double a, const State& d, int n) {
  State r = y;
  for (int j = 0; j < n; ++j) r.c[j] += a * d.c[j];
  return r;
}

bool finite_state(const State& s, int n) {
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(s.c[j])) return false;
  }
  return true;
}

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void validate_field(const VelocityFieldSpec& field) {
  if (!field.velocity) throw ValidationError("velocity field: callback not set");
  if (field.dim < 1 || field.dim > 3) {
    throw ValidationError("velocity field: dim must be 1, 2 or 3");
  }
}

}  // namespace

double field_divergence(const VelocityFieldSpec& field, const SpacetimePoint& p) {
  if (field.divergence) return field.divergence(p);

  double acc = 0.0;
  {
    const double h = 1e-5 * std::max(1.0, std::abs(p.t));
    SpacetimePoint pp = p;
    SpacetimePoint pm = p;
    pp.t += h;
    pm.t -= h;
    acc += (field.velocity(pp).dt - field.velocity(pm).dt) / (2.0 * h);
  }
  for (int j = 0; j < field.dim; ++j) {
    const double h = 1e-5 * std::max(1.0, std::abs(p.x[j]));
    SpacetimePoint pp = p;
    SpacetimePoint pm = p;
    pp.x[j] += h;
    pm.x[j] -= h;
    acc += (field.velocity(pp).dx[j] - field.velocity(pm).dx[j]) / (2.0 * h);
  }
  return acc;
}

Trajectory integrate_flow(const VelocityFieldSpec& field, const SpacetimePoint& x0,
                          double tau_final, double dt, bool with_divergence) {
  validate_field(field);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("integrate_flow: dt must be positive and finite");
  }
  if (tau_final == 0.0 || !std::isfinite(tau_final)) {
    throw ValidationError("integrate_flow: tau_final must be nonzero and finite");
  }

  const int dim = field.dim;
  const int n_comp = 1 + dim;
  const double direction = tau_final > 0.0 ? 1.0 : -1.0;
  const auto n_steps = static_cast<std::size_t>(std::ceil(std::abs(tau_final) / dt));

  Trajectory traj;
  traj.tau.reserve(n_steps + 1);
  traj.points.reserve(n_steps + 1);
  traj.velocities.reserve(n_steps + 1);
  if (with_divergence) {
    traj.div_values.reserve(n_steps + 1);
    traj.div_cumulative.reserve(n_steps + 1);
  }

  auto record = [&](double tau_s, const State& s, const State& deriv) {
    traj.tau.push_back(tau_s);
    traj.points.push_back(to_point(s, dim));
    traj.velocities.push_back(to_velocity(deriv, dim));
    if (with_divergence) {
      const double dv = field_divergence(field, traj.points.back());
      if (!std::isfinite(dv)) {
        throw NumericError("integrate_flow: divergence non-finite at tau=" + std::to_string(tau_s));
      }
      traj.div_values.push_back(dv);
    }
  };

  State y = to_state(x0, dim);
  if (!finite_state(y, n_comp)) {
    throw ValidationError("integrate_flow: initial point is not finite");
  }
  double tau = 0.0;
  State k1 = eval_field(field, y, dim);
  record(tau, y, k1);

  for (std::size_t step = 0; step < n_steps; ++step) {
    const double target =
        (step + 1 == n_steps) ? tau_final : direction * dt * static_cast<double>(step + 1);
    const double h = target - tau;

    const State k2 = eval_field(field, axpy(y, h / 2.0, k1, n_comp), dim);
    const State k3 = eval_field(field, axpy(y, h / 2.0, k2, n_comp), dim);
    const State k4 = eval_field(field, axpy(y, h, k3, n_comp), dim);
    for (int j = 0; j < n_comp; ++j) {
      y.c[j] += h / 6.0 * (k1.c[j] + 2.0 * k2.c[j] + 2.0 * k3.c[j] + k4.c[j]);
    }
    tau = target;
    if (!finite_state(y, n_comp)) {
      throw NumericError("integrate_flow: state diverged at tau=" + std::to_string(tau));
    }
    k1 = eval_field(field, y, dim);
    record(tau, y, k1);
  }

  if (with_divergence) {
    KahanSum acc;
    traj.div_cumulative.push_back(0.0);
    for (std::size_t i = 1; i < traj.tau.size(); ++i) {
      const double ds = traj.tau[i] - traj.tau[i - 1];
      acc.add(0.5 * (traj.div_values[i] + traj.div_values[i - 1]) * ds);
      traj.div_cumulative.push_back(acc.sum);
    }
  }

  return traj;
}

SpacetimePoint backward_point(const VelocityFieldSpec& field, const SpacetimePoint& y,
                              double tau, double dt) {
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw ValidationError("backward_point: tau must be >= 0 and finite");
  }
  if (tau == 0.0) return y;

  VelocityFieldSpec reversed = field;
  const auto forward = field.velocity;
  reversed.velocity = [forward](const SpacetimePoint& p) {
    FlowVelocity v = forward(p);
    v.dt = -v.dt;
    for (double& d : v.dx) d = -d;
    return v;
  };
  reversed.divergence = nullptr;
  return integrate_flow(reversed, y, tau, dt, /*with_divergence=*/false).final_point();
}

double divergence_integral(const VelocityFieldSpec& field, const Trajectory& traj) {
  if (traj.size() < 2) throw ValidationError("divergence_integral: degenerate trajectory");
  KahanSum acc;
  double prev = field_divergence(field, traj.points[0]);
  if (!std::isfinite(prev)) throw NumericError("divergence_integral: non-finite divergence");
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double cur = field_divergence(field, traj.points[i]);
    if (!std::isfinite(cur)) throw NumericError("divergence_integral: non-finite divergence");
    acc.add(0.5 * (prev + cur) * (traj.tau[i] - traj.tau[i - 1]));
    prev = cur;
  }
  return acc.sum;
}

std::vector<double> action_cumulative(const LagrangianEvaluator& lagrangian,
                                      const Trajectory& traj) {
  if (!lagrangian) throw ValidationError("action_cumulative: evaluator not set");
  if (traj.size() == 0) throw ValidationError("action_cumulative: empty trajectory");

  std::vector<double> cum;
  cum.reserve(traj.size());
  cum.push_back(0.0);
  KahanSum acc;
  double prev = lagrangian(traj.points[0], traj.velocities[0]);
  if (!std::isfinite(prev)) throw NumericError("action integral: non-finite Lagrangian value");
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double cur = lagrangian(traj.points[i], traj.velocities[i]);
    if (!std::isfinite(cur)) throw NumericError("action integral: non-finite Lagrangian value");
    acc.add(0.5 * (prev + cur) * (traj.tau[i] - traj.tau[i - 1]));
    cum.push_back(acc.sum);
    prev = cur;
  }
  return cum;
}

ActionPhase action_integral(const LagrangianEvaluator& lagrangian, const Trajectory& traj,
                            const PhysicalConstants& k) {
  const std::vector<double> cum = action_cumulative(lagrangian, traj);
  return make_action_phase(cum.back(), k);
}

}  // namespace rqte
