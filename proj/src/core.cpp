#include "rqte/core.hpp"

#include <cmath>

namespace rqte {

PhysicalConstants make_constants(UnitSystem system, double hbar, double c) {
  if (system == UnitSystem::Natural) {
    return PhysicalConstants{1.0, 1.0, UnitSystem::Natural};
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw ValidationError("make_constants: hbar must be positive and finite in SI mode");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ValidationError("make_constants: c must be positive and finite in SI mode");
  }
  return PhysicalConstants{hbar, c, UnitSystem::Si};
}

PhysicalConstants natural_units() { return make_constants(UnitSystem::Natural); }

MassWavenumber mass_from_wavenumber(double rho, const PhysicalConstants& k) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ValidationError("mass_from_wavenumber: rho must be positive and finite");
  }
  return MassWavenumber{rho * k.hbar / k.c, rho};
}

MassWavenumber mass_wavenumber_from_mass(double m, const PhysicalConstants& k) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("mass_wavenumber_from_mass: m must be positive and finite");
  }
  return MassWavenumber{m, m * k.c / k.hbar};
}

ActionPhase make_action_phase(double S, const PhysicalConstants& k) {
  return ActionPhase{S, -S / k.hbar};
}

}  // namespace rqte
