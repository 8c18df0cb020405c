#pragma once

#include <array>

#include "rqte/errors.hpp"

namespace rqte {

enum class UnitSystem { Natural, Si };

/// hbar and c together with the unit convention they follow. Natural units
/// force hbar = c = 1 exactly; SI accepts arbitrary positive values.
struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  UnitSystem unit_system = UnitSystem::Natural;
};

PhysicalConstants make_constants(UnitSystem system, double hbar = 1.0, double c = 1.0);
PhysicalConstants natural_units();

/// A rest mass and the spatial wavenumber it corresponds to, rho = m c / hbar.
/// The two fields are kept mutually consistent by the factory functions.
struct MassWavenumber {
  double m = 0.0;
  double rho = 0.0;
};

MassWavenumber mass_from_wavenumber(double rho, const PhysicalConstants& k);
MassWavenumber mass_wavenumber_from_mass(double m, const PhysicalConstants& k);

/// Action S together with the dimensionless phase Y = -S/hbar.
struct ActionPhase {
  double S = 0.0;
  double Y = 0.0;
};

ActionPhase make_action_phase(double S, const PhysicalConstants& k);

/// Point on the spacetime slab: coordinate time plus up to three spatial
/// coordinates. Only the first `dim` entries of x are meaningful for a given
/// field; unused entries stay zero.
struct SpacetimePoint {
  double t = 0.0;
  std::array<double, 3> x{0.0, 0.0, 0.0};
};

}  // namespace rqte
