#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "rqte/propagator.hpp"

using namespace rqte;

namespace {

using Complex = std::complex<double>;

// Constant coordinate velocity u carried by the proper 4-velocity (gamma, gamma u).
VelocityFieldSpec boost_field(double u, double c = 1.0) {
  const double gamma = 1.0 / std::sqrt(1.0 - (u / c) * (u / c));
  VelocityFieldSpec f;
  f.dim = 1;
  f.velocity = [gamma, u](const SpacetimePoint&) {
    FlowVelocity v;
    v.dt = gamma;
    v.dx = {gamma * u, 0.0, 0.0};
    return v;
  };
  f.divergence = [](const SpacetimePoint&) { return 0.0; };
  return f;
}

// All characteristics translate together: x(t) = x0 + (A/omega) sin(omega t).
VelocityFieldSpec oscillating_field(double A, double omega) {
  VelocityFieldSpec f;
  f.dim = 1;
  f.velocity = [A, omega](const SpacetimePoint& p) {
    FlowVelocity v;
    v.dt = 1.0;
    v.dx = {A * std::cos(omega * p.t), 0.0, 0.0};
    return v;
  };
  f.divergence = [](const SpacetimePoint&) { return 0.0; };
  return f;
}

// Compressible drift: div V = a sech^2(x).
VelocityFieldSpec tanh_field(double u0, double a) {
  VelocityFieldSpec f;
  f.dim = 1;
  f.velocity = [u0, a](const SpacetimePoint& p) {
    FlowVelocity v;
    v.dt = 1.0;
    v.dx = {u0 + a * std::tanh(p.x[0]), 0.0, 0.0};
    return v;
  };
  f.divergence = [a](const SpacetimePoint& p) {
    const double s = 1.0 / std::cosh(p.x[0]);
    return a * s * s;
  };
  return f;
}

Complex gaussian(double x, double sigma = 1.0) {
  return {std::exp(-x * x / (2.0 * sigma * sigma)), 0.0};
}

WavefunctionGrid gaussian_grid(double x_min, double x_max, double spacing, double sigma = 1.0) {
  const auto n = static_cast<std::size_t>(std::round((x_max - x_min) / spacing)) + 1;
  return sample_grid(x_min, spacing, n, [sigma](double x) { return gaussian(x, sigma); });
}

PropagatorConfig fock_config(VelocityFieldSpec field, double m = 1.0,
                             DivergenceWeight w = DivergenceWeight::Full) {
  const PhysicalConstants kc = natural_units();
  PropagatorConfig cfg;
  cfg.field = std::move(field);
  cfg.constants = kc;
  cfg.lagrangian = make_fock(mass_wavenumber_from_mass(m, kc), kc);
  cfg.divergence_weight = w;
  // Tails of the test Gaussians legitimately back-map off-hull.
  cfg.offgrid_warn_fraction = 0.25;
  return cfg;
}

}  // namespace

TEST_CASE("tau = 0 is the exact identity") {
  PropagatorConfig cfg = fock_config(boost_field(0.3));
  const auto psi0 = [](const SpacetimePoint& p) { return gaussian(p.x[0]); };
  const SpacetimePoint y{0.0, {0.37, 0.0, 0.0}};
  CHECK(evolve_point(cfg, psi0, y, 0.0) == gaussian(0.37));

  const WavefunctionGrid g0 = gaussian_grid(-5.0, 5.0, 0.1);
  const WavefunctionGrid g1 = evolve_grid(cfg, g0, 0.0);
  REQUIRE(g1.size() == g0.size());
  for (std::size_t i = 0; i < g0.size(); ++i) {
    CHECK(g1.values[i] == g0.values[i]);
  }
}

TEST_CASE("constant field: translated initial data times the rest phase") {
  const double u = 0.5;
  const double gamma = 1.0 / std::sqrt(1.0 - u * u);
  const double tau = 1.0;
  PropagatorConfig cfg = fock_config(boost_field(u));

  SUBCASE("pointwise against the closed form") {
    const auto psi0 = [](const SpacetimePoint& p) { return gaussian(p.x[0]); };
    for (const double x : {-1.0, -0.2, 0.0, 0.8, 2.0}) {
      const SpacetimePoint y{gamma * tau, {x, 0.0, 0.0}};
      const Complex got = evolve_point(cfg, psi0, y, tau);
      const Complex expected = gaussian(x - u * gamma * tau) * std::polar(1.0, -tau);
      CHECK(std::abs(got - expected) < 1e-10);
    }
  }

  SUBCASE("grid modulus profile within interpolation tolerance") {
    const WavefunctionGrid g0 = gaussian_grid(-10.0, 10.0, 0.02);
    const WavefunctionGrid g1 = evolve_grid(cfg, g0, tau);
    CHECK(g1.tau == doctest::Approx(tau));
    CHECK(g1.t == doctest::Approx(gamma * tau).epsilon(1e-12));
    double max_err = 0.0;
    for (std::size_t i = 0; i < g1.size(); ++i) {
      const double x = g1.x_at(i);
      if (std::abs(x) > 8.0) continue;  // translated data near the edge is zero-extended
      const Complex expected = gaussian(x - u * gamma * tau) * std::polar(1.0, -tau);
      max_err = std::max(max_err, std::abs(g1.values[i] - expected));
    }
    CHECK(max_err < 1e-6);
  }
}

TEST_CASE("pure divergence weight: full e^{-1}, half e^{-1/2}") {
  // v(x) = x has unit divergence; the potential is engineered so that the
  // classical Lagrangian vanishes identically along this flow (v^2 = x^2).
  VelocityFieldSpec f;
  f.dim = 1;
  f.velocity = [](const SpacetimePoint& p) {
    FlowVelocity v;
    v.dt = 1.0;
    v.dx = {p.x[0], 0.0, 0.0};
    return v;
  };
  f.divergence = [](const SpacetimePoint&) { return 1.0; };

  const PhysicalConstants kc = natural_units();
  PropagatorConfig cfg;
  cfg.field = f;
  cfg.constants = kc;
  cfg.lagrangian = make_classical(
      mass_wavenumber_from_mass(1.0, kc), [](double x) { return 0.5 * x * x - 0.5; }, kc);

  const auto one = [](const SpacetimePoint&) { return Complex{1.0, 0.0}; };
  const SpacetimePoint y{1.0, {0.8, 0.0, 0.0}};

  cfg.divergence_weight = DivergenceWeight::Full;
  CHECK(std::abs(evolve_point(cfg, one, y, 1.0) - Complex{std::exp(-1.0), 0.0}) < 1e-9);

  cfg.divergence_weight = DivergenceWeight::Half;
  CHECK(std::abs(evolve_point(cfg, one, y, 1.0) - Complex{std::exp(-0.5), 0.0}) < 1e-9);
}

TEST_CASE("modulus factorization: the Lagrangian changes only the phase") {
  const auto psi0 = [](const SpacetimePoint& p) { return gaussian(p.x[0]); };
  PropagatorConfig cfg1 = fock_config(tanh_field(1.0, 0.3), 1.0);
  PropagatorConfig cfg2 = fock_config(tanh_field(1.0, 0.3), 2.0);  // doubles the Fock L

  for (const double x : {-1.0, 0.5, 2.0}) {
    const SpacetimePoint y{1.5, {x, 0.0, 0.0}};
    const Complex a = evolve_point(cfg1, psi0, y, 1.5);
    const Complex b = evolve_point(cfg2, psi0, y, 1.5);
    CHECK(std::abs(std::abs(a) - std::abs(b)) <= 1e-12 * std::abs(a));
    CHECK(std::abs(a - b) > 1e-3 * std::abs(a));  // phases genuinely differ
  }
}

TEST_CASE("half weight conserves the grid norm on a compressible flow") {
  PropagatorConfig cfg = fock_config(tanh_field(1.0, 0.3), 1.0, DivergenceWeight::Half);
  cfg.dt = 2e-3;
  const auto n = static_cast<std::size_t>(std::round((22.0 - (-16.0)) / 0.025)) + 1;
  const WavefunctionGrid g0 =
      sample_grid(-16.0, 0.025, n, [](double x) { return gaussian(x + 3.0); });
  const double norm0 = grid_norm(g0);
  const WavefunctionGrid g1 = evolve_grid(cfg, g0, 2.0);
  CHECK(std::abs(grid_norm(g1) - norm0) <= 1e-5 * norm0);
}

TEST_CASE("closed characteristics: |phi| returns after one period") {
  const double omega = 2.0;
  const double T = 2.0 * std::numbers::pi / omega;
  PropagatorConfig cfg =
      fock_config(oscillating_field(1.0, omega), 1.0, DivergenceWeight::Half);
  const WavefunctionGrid g0 = gaussian_grid(-6.0, 6.0, 0.05);
  const WavefunctionGrid g1 = evolve_grid(cfg, g0, T);
  double max_err = 0.0;
  for (std::size_t i = 0; i < g0.size(); ++i) {
    max_err = std::max(max_err, std::abs(std::abs(g1.values[i]) - std::abs(g0.values[i])));
  }
  CHECK(max_err < 1e-6);
}

TEST_CASE("compose_check") {
  SUBCASE("zero split is exactly zero") {
    PropagatorConfig cfg = fock_config(boost_field(0.4));
    const WavefunctionGrid g0 = gaussian_grid(-5.0, 5.0, 0.1);
    CHECK(compose_check(cfg, g0, 0.0, 0.0) == 0.0);
  }

  SUBCASE("exact translations stay below 1e-8") {
    // gamma = 1 field with u = 1: a translation by exactly tau, and tau
    // chosen as an integer multiple of the spacing.
    VelocityFieldSpec f;
    f.dim = 1;
    f.velocity = [](const SpacetimePoint&) {
      FlowVelocity v;
      v.dt = 1.0;
      v.dx = {1.0, 0.0, 0.0};
      return v;
    };
    f.divergence = [](const SpacetimePoint&) { return 0.0; };
    PropagatorConfig cfg = fock_config(f);
    const WavefunctionGrid g0 = gaussian_grid(-10.0, 10.0, 0.1);
    CHECK(compose_check(cfg, g0, 1.0, 0.5) < 1e-8);
  }

  SUBCASE("oscillating field stays below 1e-4 at defaults") {
    const double omega = 2.0;
    const double T = 2.0 * std::numbers::pi / omega;
    PropagatorConfig cfg = fock_config(oscillating_field(1.0, omega));
    const WavefunctionGrid g0 = gaussian_grid(-8.0, 8.0, 0.05);
    CHECK(compose_check(cfg, g0, T / 4.0, T / 4.0) < 1e-4);
  }

  SUBCASE("deviation shrinks at interpolation order under grid refinement") {
    const double omega = 2.0;
    const double T = 2.0 * std::numbers::pi / omega;
    PropagatorConfig cfg = fock_config(oscillating_field(1.0, omega));
    const double coarse =
        compose_check(cfg, gaussian_grid(-6.0, 6.0, 0.08), T / 8.0, T / 8.0);
    const double fine =
        compose_check(cfg, gaussian_grid(-6.0, 6.0, 0.04), T / 8.0, T / 8.0);
    // cubic interpolation error scales like h^4; leave slack for the
    // integrator contribution
    CHECK(fine < coarse / 6.0);
  }
}

TEST_CASE("grid_norm examples") {
  SUBCASE("unit-normalized Gaussian") {
    const double a = std::pow(std::numbers::pi, -0.25);
    const WavefunctionGrid g = sample_grid(-8.0, 0.01, 1601, [a](double x) {
      return Complex{a * std::exp(-x * x / 2.0), 0.0};
    });
    CHECK(std::abs(grid_norm(g) - 1.0) < 1e-6);
  }
  SUBCASE("all-zero grid") {
    WavefunctionGrid g;
    g.origin = 0.0;
    g.spacing = 0.5;
    g.values.assign(16, Complex{0.0, 0.0});
    CHECK(grid_norm(g) == 0.0);
  }
}

TEST_CASE("back-mapped points outside the hull read as zero") {
  PropagatorConfig cfg = fock_config(boost_field(0.5));
  cfg.offgrid_warn_fraction = 1.1;  // silence the warning for this deliberate case
  const WavefunctionGrid g0 =
      sample_grid(0.0, 0.1, 11, [](double) { return Complex{1.0, 0.0}; });
  const double gamma = 1.0 / std::sqrt(1.0 - 0.25);
  const WavefunctionGrid g1 = evolve_grid(cfg, g0, 0.5);
  // Leftmost nodes back-map to x < 0, outside the initial hull.
  CHECK(std::abs(g1.values[0]) == 0.0);
  // Rightmost node back-maps inside and keeps unit modulus.
  CHECK(std::abs(g1.values[10]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(g1.t == doctest::Approx(gamma * 0.5).epsilon(1e-12));
}

TEST_CASE("validation and error paths") {
  PropagatorConfig cfg = fock_config(boost_field(0.2));
  const auto psi0 = [](const SpacetimePoint&) { return Complex{1.0, 0.0}; };
  CHECK_THROWS_AS(evolve_point(cfg, psi0, SpacetimePoint{}, -1.0), ValidationError);

  const auto bad_psi0 = [](const SpacetimePoint&) {
    return Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
  };
  CHECK_THROWS_AS(evolve_point(cfg, bad_psi0, SpacetimePoint{}, 0.5), NumericError);

  WavefunctionGrid tiny;
  tiny.origin = 0.0;
  tiny.spacing = 1.0;
  tiny.values.assign(3, Complex{1.0, 0.0});
  CHECK_THROWS_AS(evolve_grid(cfg, tiny, 1.0), ValidationError);

  cfg.field.autonomous = false;
  const WavefunctionGrid g0 = gaussian_grid(-2.0, 2.0, 0.5);
  CHECK_THROWS_AS(compose_check(cfg, g0, 0.1, 0.1), ValidationError);
}
