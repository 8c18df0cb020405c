#pragma once

#include <vector>

#include "rqte/core.hpp"

namespace rqte {

struct Level {
  int n = 0;
  double lambda = 0.0;
};

struct QuantizationResult {
  std::vector<Level> levels;      // strictly increasing in n
  double action_residual = 0.0;   // int L_c dt over one period (harmonic case)
  double period = 0.0;
};

/// Harmonic-oscillator levels by phase closure over the numerically
/// integrated classical orbit: lambda_n = (2 pi n hbar - int L_c dt)/T
/// + hbar omega / 2, where the metric zero-point term m c^2/2 enters through
/// the wavenumber identity m c^2 = hbar omega. The orbit integral int L_c dt
/// vanishes analytically and is reported as action_residual.
QuantizationResult harmonic_levels(double m, double omega, double x0, int n_max,
                                   const PhysicalConstants& kc, double dt = 1e-3);

/// Particle-in-a-box levels, closed form: lambda_n = pi^2 hbar^2 n^2 / (2 m l^2)
/// for n = 1..n_max (n = 0 is the trivial eigenfunction and is rejected).
QuantizationResult box_levels(double l, double m, int n_max, const PhysicalConstants& kc);

/// Open-string constants for a string of length l_s. Both frequency
/// conventions are reported: resonance_unit evaluates rho c hbar / (m c^2)
/// (expected 1), resonance_factor evaluates omega_s / Omega with
/// omega_s = 2 rho c (expected 2). The factor-2 gap between the two stated
/// conventions is surfaced as a diagnostic, never silently resolved.
struct StringParameters {
  double l_s = 0.0;
  double rho = 0.0;       // 1 / l_s
  double m = 0.0;         // rho hbar / c
  double mu0 = 0.0;       // rest mass per unit length, m / l_s
  double T0 = 0.0;        // tension, 2 hbar c / (pi l_s^2)
  double sigma1 = 0.0;    // pi l_s / 2
  double omega_s = 0.0;   // 2 rho c
  double Omega = 0.0;     // m c^2 / hbar
  double closure_residual = 0.0;   // sigma1 T0 - m c^2
  double resonance_unit = 0.0;     // rho c hbar / (m c^2)
  double resonance_factor = 0.0;   // omega_s / Omega
};

StringParameters string_identities(double l_s, const PhysicalConstants& kc);

/// Reduced Compton wavelength hbar / (m c) = 1 / rho.
double compton_wavelength(double m, const PhysicalConstants& kc);

}  // namespace rqte
