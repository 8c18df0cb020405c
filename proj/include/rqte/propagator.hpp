#pragma once

#include <complex>
#include <functional>

#include "rqte/flow.hpp"
#include "rqte/grid.hpp"
#include "rqte/lagrangian.hpp"

namespace rqte {

/// Full weight exp(-int div V) transports the observable wavefunction psi;
/// Half weight exp(-1/2 int div V) transports the probability-amplitude
/// form phi, whose squared modulus is the invariant density. The two differ
/// only in the weight exponent, not in code path.
enum class DivergenceWeight { Full, Half };

struct PropagatorConfig {
  VelocityFieldSpec field;
  LagrangianSpec lagrangian;
  PhysicalConstants constants;
  double dt = 1e-3;
  DivergenceWeight divergence_weight = DivergenceWeight::Full;
  /// evolve_grid warns on stderr when more than this fraction of back-mapped
  /// points falls outside the initial grid hull (where the data is taken as 0).
  double offgrid_warn_fraction = 0.01;
};

/// Evaluates the transported wavefunction at a single point:
///   X0 = G^{-tau}(y), then forward re-integration from X0 accumulates the
///   divergence weight and the action phase along the identical discrete
///   path, returning psi0(X0) * exp(-w int div V) * exp(i S / hbar).
/// tau == 0 returns psi0(y) exactly; no quadrature runs.
std::complex<double> evolve_point(const PropagatorConfig& cfg,
                                  const std::function<std::complex<double>(const SpacetimePoint&)>& psi0,
                                  const SpacetimePoint& y, double tau);

/// Applies evolve_point at every grid node. The initial condition is the
/// cubic interpolant of grid0 (zero outside the hull, constant in t). The
/// output grid shares origin/spacing; its slice time advances by
/// tau * (dt/dtau sampled at the grid center) and the tau stamp by tau.
WavefunctionGrid evolve_grid(const PropagatorConfig& cfg, const WavefunctionGrid& grid0,
                             double tau);

/// Discrete L2 norm: sum |values|^2 * spacing.
double grid_norm(const WavefunctionGrid& g);

/// max_i |W^{tau1+tau2} g0 - W^{tau2}(W^{tau1} g0)| over grid nodes.
/// Requires an autonomous field (the group law does not hold otherwise).
double compose_check(const PropagatorConfig& cfg, const WavefunctionGrid& grid0,
                     double tau1, double tau2);

}  // namespace rqte
