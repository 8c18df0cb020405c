#include <complex>
#include <random>

#include "doctest.h"
#include "rqte/core.hpp"
#include "rqte/grid.hpp"
#include "rqte/propagator.hpp"

using namespace rqte;

TEST_CASE("make_constants natural forces hbar = c = 1") {
  const PhysicalConstants k = make_constants(UnitSystem::Natural, 42.0, -3.0);
  CHECK(k.hbar == 1.0);
  CHECK(k.c == 1.0);
  CHECK(k.unit_system == UnitSystem::Natural);
}

TEST_CASE("make_constants SI accepts values verbatim") {
  const PhysicalConstants k = make_constants(UnitSystem::Si, 1.0546e-34, 2.9979e8);
  CHECK(k.hbar == 1.0546e-34);
  CHECK(k.c == 2.9979e8);
}

TEST_CASE("make_constants SI rejects non-positive values") {
  CHECK_THROWS_AS(make_constants(UnitSystem::Si, -1.0, 3e8), ValidationError);
  CHECK_THROWS_AS(make_constants(UnitSystem::Si, 1e-34, 0.0), ValidationError);
}

TEST_CASE("mass_from_wavenumber in natural units") {
  const PhysicalConstants k = natural_units();
  CHECK(mass_from_wavenumber(1.0, k).m == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mass_from_wavenumber(2.0, k).m == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(mass_from_wavenumber(0.0, k), ValidationError);
  CHECK_THROWS_AS(mass_from_wavenumber(-1.0, k), ValidationError);
}

TEST_CASE("mass/wavenumber round trip for the electron in SI") {
  const PhysicalConstants k = make_constants(UnitSystem::Si, 1.0546e-34, 2.9979e8);
  const double m_e = 9.109e-31;
  const double rho = m_e * k.c / k.hbar;
  const MassWavenumber mw = mass_from_wavenumber(rho, k);
  CHECK(std::abs(mw.m - m_e) / m_e < 1e-12);
  // and back again
  const MassWavenumber mw2 = mass_wavenumber_from_mass(mw.m, k);
  CHECK(std::abs(mw2.rho - rho) / rho < 1e-12);
}

TEST_CASE("round trip property over random wavenumbers") {
  std::mt19937_64 rng(7771);
  std::uniform_real_distribution<double> draw(1e-6, 1e6);
  const PhysicalConstants nat = natural_units();
  const PhysicalConstants si = make_constants(UnitSystem::Si, 1.0546e-34, 2.9979e8);
  for (int i = 0; i < 200; ++i) {
    const double rho = draw(rng);
    for (const PhysicalConstants& k : {nat, si}) {
      const MassWavenumber mw = mass_from_wavenumber(rho, k);
      const double back = mw.m * k.c / k.hbar;
      CHECK(std::abs(back - rho) / rho < 1e-12);
    }
  }
}

TEST_CASE("action phase Y = -S/hbar") {
  const PhysicalConstants k = natural_units();
  const ActionPhase a = make_action_phase(3.5, k);
  CHECK(a.S == 3.5);
  CHECK(a.Y == -3.5);

  const PhysicalConstants si = make_constants(UnitSystem::Si, 1.0546e-34, 2.9979e8);
  const ActionPhase b = make_action_phase(2.1e-34, si);
  CHECK(std::abs(b.Y + b.S / si.hbar) <= 1e-12 * std::abs(b.Y));
}

TEST_CASE("grid norm is invariant under copy and global phase") {
  std::mt19937_64 rng(991);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int rep = 0; rep < 20; ++rep) {
    WavefunctionGrid g;
    g.origin = -2.0;
    g.spacing = 0.05;
    g.values.resize(160);
    for (auto& v : g.values) v = {amp(rng), amp(rng)};

    const double n0 = grid_norm(g);
    const WavefunctionGrid copy = g;
    CHECK(grid_norm(copy) == n0);

    WavefunctionGrid rotated = g;
    const std::complex<double> phase = std::polar(1.0, angle(rng));
    for (auto& v : rotated.values) v *= phase;
    CHECK(std::abs(grid_norm(rotated) - n0) <= 1e-14 * n0);
  }
}

TEST_CASE("grid validation") {
  WavefunctionGrid g;
  g.values = {};
  CHECK_THROWS_AS(validate_grid(g), ValidationError);
  g.values = {{1.0, 0.0}};
  g.spacing = 0.0;
  CHECK_THROWS_AS(validate_grid(g), ValidationError);
  g.spacing = 0.1;
  CHECK_NOTHROW(validate_grid(g));
}
