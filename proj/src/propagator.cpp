#include "rqte/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "rqte/kernels.hpp"

namespace rqte {

namespace {

bool finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

std::complex<double> evolve_point_impl(
    const PropagatorConfig& cfg, const LagrangianEvaluator& lagrangian,
    const std::function<std::complex<double>(const SpacetimePoint&)>& psi0,
    const SpacetimePoint& y, double tau) {
  if (tau == 0.0) {
    const std::complex<double> v = psi0(y);
    if (!finite(v)) throw NumericError("evolve_point: initial wavefunction non-finite");
    return v;
  }

  const SpacetimePoint x0 = backward_point(cfg.field, y, tau, cfg.dt);
  // Weight and phase are accumulated along the same forward path from x0.
  const Trajectory traj = integrate_flow(cfg.field, x0, tau, cfg.dt, /*with_divergence=*/true);
  const double div_int = traj.div_integral();
  const ActionPhase action = action_integral(lagrangian, traj, cfg.constants);

  const std::complex<double> value0 = psi0(x0);
  if (!finite(value0)) {
    throw NumericError("evolve_point: initial wavefunction non-finite at back-mapped point");
  }

  const double w = cfg.divergence_weight == DivergenceWeight::Full ? 1.0 : 0.5;
  return value0 * std::exp(std::complex<double>(-w * div_int, action.S / cfg.constants.hbar));
}

}  // namespace

std::complex<double> evolve_point(const PropagatorConfig& cfg,
                                  const std::function<std::complex<double>(const SpacetimePoint&)>& psi0,
                                  const SpacetimePoint& y, double tau) {
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw ValidationError("evolve_point: tau must be >= 0 and finite");
  }
  if (!psi0) throw ValidationError("evolve_point: psi0 not set");
  if (tau == 0.0) {
    const std::complex<double> v = psi0(y);
    if (!finite(v)) throw NumericError("evolve_point: initial wavefunction non-finite");
    return v;
  }
  return evolve_point_impl(cfg, make_evaluator(cfg.lagrangian), psi0, y, tau);
}

WavefunctionGrid evolve_grid(const PropagatorConfig& cfg, const WavefunctionGrid& grid0,
                             double tau) {
  validate_grid(grid0);
  if (tau < 0.0 || !std::isfinite(tau)) {
    throw ValidationError("evolve_grid: tau must be >= 0 and finite");
  }

  WavefunctionGrid out = grid0;
  if (tau == 0.0) return out;

  if (grid0.size() < 4) {
    throw ValidationError("evolve_grid: at least 4 nodes required for cubic interpolation");
  }

  const CubicInterpolant interp(grid0);
  std::size_t off_hull = 0;
  const auto psi0 = [&](const SpacetimePoint& p) {
    if (!interp.in_hull(p.x[0])) ++off_hull;
    return interp(p.x[0]);
  };

  // The output slice advances by tau times the field's time rate; every
  // scenario field has a globally constant dt/dtau, sampled at the center.
  const SpacetimePoint probe{grid0.t, {0.5 * (grid0.origin + grid0.x_last()), 0.0, 0.0}};
  const double slice_rate = cfg.field.velocity(probe).dt;
  out.t = grid0.t + tau * slice_rate;
  out.tau = grid0.tau + tau;

  const LagrangianEvaluator lagrangian = make_evaluator(cfg.lagrangian);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const SpacetimePoint y{out.t, {grid0.x_at(i), 0.0, 0.0}};
    out.values[i] = evolve_point_impl(cfg, lagrangian, psi0, y, tau);
  }

  const double fraction = static_cast<double>(off_hull) / static_cast<double>(out.size());
  if (fraction > cfg.offgrid_warn_fraction) {
    std::cerr << "rqte: warning: " << fraction * 100.0
              << "% of back-mapped points left the grid hull (treated as zero)\n";
  }
  return out;
}

double grid_norm(const WavefunctionGrid& g) {
  validate_grid(g);
  return kernels::norm_sq_sum(g.values.data(), g.values.size()) * g.spacing;
}

double compose_check(const PropagatorConfig& cfg, const WavefunctionGrid& grid0,
                     double tau1, double tau2) {
  if (!cfg.field.autonomous) {
    throw ValidationError("compose_check: field must be autonomous");
  }
  const WavefunctionGrid direct = evolve_grid(cfg, grid0, tau1 + tau2);
  const WavefunctionGrid staged = evolve_grid(cfg, evolve_grid(cfg, grid0, tau1), tau2);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < direct.size(); ++i) {
    max_dev = std::max(max_dev, std::abs(direct.values[i] - staged.values[i]));
  }
  return max_dev;
}

}  // namespace rqte
