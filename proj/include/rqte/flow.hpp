#pragma once

#include <functional>
#include <vector>

#include "rqte/core.hpp"

namespace rqte {

/// Velocity of the spacetime flow at a point: d(t)/dtau and d(x_j)/dtau.
struct FlowVelocity {
  double dt = 0.0;
  std::array<double, 3> dx{0.0, 0.0, 0.0};
};

/// A spacetime velocity field with `dim` spatial components. `velocity`
/// must be reentrant (no internal mutation). `divergence` is the analytic
/// divergence over (t, x_0..x_{dim-1}); when empty, central finite
/// differences with step 1e-5*max(1,|coord|) are used instead.
struct VelocityFieldSpec {
  int dim = 1;
  std::function<FlowVelocity(const SpacetimePoint&)> velocity;
  std::function<double(const SpacetimePoint&)> divergence;
  bool autonomous = true;
};

double field_divergence(const VelocityFieldSpec& field, const SpacetimePoint& p);

/// Sampled characteristic curve. tau[0] == 0 and tau is strictly monotone
/// (increasing for forward integration, decreasing for backward).
/// velocities[i] is the field evaluated at points[i]; div_cumulative[i] is
/// the trapezoid of div V from tau[0] to tau[i] and starts at 0.
struct Trajectory {
  std::vector<double> tau;
  std::vector<SpacetimePoint> points;
  std::vector<FlowVelocity> velocities;
  std::vector<double> div_values;
  std::vector<double> div_cumulative;

  std::size_t size() const { return tau.size(); }
  const SpacetimePoint& final_point() const { return points.back(); }
  double div_integral() const { return div_cumulative.back(); }
};

/// Classical fixed-step 4th-order integration from x0 to tau_final.
/// ceil(|tau_final|/dt) steps with a shortened last step; the final sample
/// lands exactly on tau_final. Negative tau_final integrates backward.
/// Throws NumericError naming the failing tau when the state stops being
/// finite. `with_divergence=false` skips the divergence accumulation (the
/// div_* vectors stay empty).
Trajectory integrate_flow(const VelocityFieldSpec& field, const SpacetimePoint& x0,
                          double tau_final, double dt, bool with_divergence = true);

/// G^{-tau}(y) for tau >= 0: the field is negated and integrated forward,
/// rather than interpolating stored forward trajectories.
SpacetimePoint backward_point(const VelocityFieldSpec& field, const SpacetimePoint& y,
                              double tau, double dt);

/// Trapezoid of div V over the trajectory samples, evaluated afresh from the
/// field (independent of the cumulative stored on the trajectory).
double divergence_integral(const VelocityFieldSpec& field, const Trajectory& traj);

using LagrangianEvaluator = std::function<double(const SpacetimePoint&, const FlowVelocity&)>;

/// S = trapezoid of L over the trajectory samples; Y = -S/hbar.
ActionPhase action_integral(const LagrangianEvaluator& lagrangian, const Trajectory& traj,
                            const PhysicalConstants& k);

/// Per-sample cumulative action, same quadrature as action_integral.
std::vector<double> action_cumulative(const LagrangianEvaluator& lagrangian,
                                      const Trajectory& traj);

}  // namespace rqte
