#pragma once

#include <functional>

#include "rqte/core.hpp"
#include "rqte/flow.hpp"

namespace rqte {

enum class LagrangianKind { Fock, RelFree, ClassicalPotential };

/// Proper-time Lagrangians. ClassicalPotential requires a static potential
/// U(x); the other kinds forbid one. Potentials are functions of position
/// only, so time-dependent potentials cannot be expressed.
struct LagrangianSpec {
  LagrangianKind kind = LagrangianKind::Fock;
  MassWavenumber mass;
  std::function<double(double)> potential;  // U(x), 1-D
  PhysicalConstants constants;
};

LagrangianSpec make_fock(const MassWavenumber& mass, const PhysicalConstants& k);
LagrangianSpec make_rel_free(const MassWavenumber& mass, const PhysicalConstants& k);
LagrangianSpec make_classical(const MassWavenumber& mass, std::function<double(double)> potential,
                              const PhysicalConstants& k);

/// (m/2)||V||^2 - m c^2/2 with the (-,+,+,+) signature norm
/// ||V||^2 = -c^2 (dt/dtau)^2 + sum_j (dx_j/dtau)^2.
double eval_fock(const LagrangianSpec& spec, const FlowVelocity& v);

/// m v^2/2 - U(x) - m c^2/2. The constant metric term is retained: level
/// spacings are insensitive to it but zero-point offsets are not.
double eval_classical(const LagrangianSpec& spec, double x, double v);

/// -m c^2 / gamma for coordinate speed |v| < c.
double eval_rel_free(const LagrangianSpec& spec, double speed);

/// g00 = 1 + 2U/(m c^2), the static-potential correction to the time metric.
double g00_from_potential(double U, double m, double c);

/// Adapter used by the propagator and quantization: evaluates the spec along
/// trajectory samples. Fock uses the stored flow velocity; ClassicalPotential
/// reads x = point.x[0], v = velocity.dx[0]. RelFree is not evaluable along a
/// trajectory and is rejected.
LagrangianEvaluator make_evaluator(const LagrangianSpec& spec);

}  // namespace rqte
