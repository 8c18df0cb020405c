#include "rqte/lagrangian.hpp"

#include <cmath>

namespace rqte {

namespace {

void check_mass(const MassWavenumber& mass) {
  if (!(mass.m > 0.0) || !std::isfinite(mass.m)) {
    throw ValidationError("lagrangian: mass must be positive and finite");
  }
}

}  // namespace

LagrangianSpec make_fock(const MassWavenumber& mass, const PhysicalConstants& k) {
  check_mass(mass);
  return LagrangianSpec{LagrangianKind::Fock, mass, nullptr, k};
}

LagrangianSpec make_rel_free(const MassWavenumber& mass, const PhysicalConstants& k) {
  check_mass(mass);
  return LagrangianSpec{LagrangianKind::RelFree, mass, nullptr, k};
}

LagrangianSpec make_classical(const MassWavenumber& mass, std::function<double(double)> potential,
                              const PhysicalConstants& k) {
  check_mass(mass);
  if (!potential) {
    throw ValidationError("make_classical: potential is required");
  }
  return LagrangianSpec{LagrangianKind::ClassicalPotential, mass, std::move(potential), k};
}

double eval_fock(const LagrangianSpec& spec, const FlowVelocity& v) {
  if (spec.kind != LagrangianKind::Fock) {
    throw ValidationError("eval_fock: spec kind is not Fock");
  }
  const double c = spec.constants.c;
  const double m = spec.mass.m;
  double norm_sq = -(c * c) * v.dt * v.dt;
  for (double d : v.dx) norm_sq += d * d;
  return 0.5 * m * norm_sq - 0.5 * m * c * c;
}

double eval_classical(const LagrangianSpec& spec, double x, double v) {
  if (spec.kind != LagrangianKind::ClassicalPotential) {
    throw ValidationError("eval_classical: spec kind is not ClassicalPotential");
  }
  const double c = spec.constants.c;
  const double m = spec.mass.m;
  return 0.5 * m * v * v - spec.potential(x) - 0.5 * m * c * c;
}

double eval_rel_free(const LagrangianSpec& spec, double speed) {
  if (spec.kind != LagrangianKind::RelFree) {
    throw ValidationError("eval_rel_free: spec kind is not RelFree");
  }
  const double c = spec.constants.c;
  const double m = spec.mass.m;
  if (!(std::abs(speed) < c)) {
    throw ValidationError("eval_rel_free: speed must be strictly below c");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - (speed / c) * (speed / c));
  return -m * c * c / gamma;
}

double g00_from_potential(double U, double m, double c) {
  if (!(m > 0.0) || !(c > 0.0)) {
    throw ValidationError("g00_from_potential: m and c must be positive");
  }
  return 1.0 + 2.0 * U / (m * c * c);
}

LagrangianEvaluator make_evaluator(const LagrangianSpec& spec) {
  switch (spec.kind) {
    case LagrangianKind::Fock:
      return [spec](const SpacetimePoint&, const FlowVelocity& v) { return eval_fock(spec, v); };
    case LagrangianKind::ClassicalPotential:
      return [spec](const SpacetimePoint& p, const FlowVelocity& v) {
        return eval_classical(spec, p.x[0], v.dx[0]);
      };
    case LagrangianKind::RelFree:
      throw ValidationError("make_evaluator: rel-free Lagrangian is not evaluable along a trajectory");
  }
  throw ValidationError("make_evaluator: unknown Lagrangian kind");
}

}  // namespace rqte
