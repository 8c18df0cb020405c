#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rqte/dirac.hpp"
#include "rqte/propagator.hpp"

using namespace rqte;

namespace {

using Complex = std::complex<double>;

Matrix4 multiply(const Matrix4& A, const Matrix4& B) {
  Matrix4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc{0.0, 0.0};
      for (int l = 0; l < 4; ++l) acc += A[i][l] * B[l][j];
      r[i][j] = acc;
    }
  }
  return r;
}

double hermiticity_residual(const Matrix4& M) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      r = std::max(r, std::abs(M[i][j] - std::conj(M[j][i])));
    }
  }
  return r;
}

double identity_residual(const Matrix4& M) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex expected = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      r = std::max(r, std::abs(M[i][j] - expected));
    }
  }
  return r;
}

std::array<double, 3> random_velocity(std::mt19937_64& rng, double max_speed) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> speed_draw(0.0, max_speed);
  const double cos_theta = unit(rng);
  const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
  const double phi = std::numbers::pi * (unit(rng) + 1.0);
  const double s = speed_draw(rng);
  return {s * sin_theta * std::cos(phi), s * sin_theta * std::sin(phi), s * cos_theta};
}

}  // namespace

TEST_CASE("matrix algebra identities are exact in floating point") {
  const DiracMatrices& d = dirac_matrices();
  for (const Matrix4* M : {&d.beta, &d.alpha1, &d.alpha2, &d.alpha3}) {
    CHECK(hermiticity_residual(*M) <= 1e-14);
    CHECK(identity_residual(multiply(*M, *M)) <= 1e-14);
  }
  CHECK(max_abs(anticommutator(d.alpha1, d.beta)) <= 1e-14);
  CHECK(max_abs(anticommutator(d.alpha2, d.beta)) <= 1e-14);
  CHECK(max_abs(anticommutator(d.alpha3, d.beta)) <= 1e-14);
  CHECK(max_abs(anticommutator(d.alpha1, d.alpha2)) <= 1e-14);
  CHECK(max_abs(anticommutator(d.alpha1, d.alpha3)) <= 1e-14);
  CHECK(max_abs(anticommutator(d.alpha2, d.alpha3)) <= 1e-14);
}

TEST_CASE("rest-frame spinors are the canonical basis") {
  const PhysicalConstants kc = natural_units();
  const SpinorSet s = build_spinors({0.0, 0.0, 0.0}, 1.0, kc);
  CHECK(s.n == 1.0);
  CHECK(s.gamma == 1.0);
  CHECK(s.E == 1.0);
  const Spinor e1{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, 0}};
  const Spinor e2{Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}};
  const Spinor e3{Complex{0, 0}, Complex{0, 0}, Complex{1, 0}, Complex{0, 0}};
  const Spinor e4{Complex{0, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(s.u1[i] - e1[i]) == 0.0);
    CHECK(std::abs(s.u2[i] - e2[i]) == 0.0);
    CHECK(std::abs(s.v1[i] - e3[i]) == 0.0);
    CHECK(std::abs(s.v2[i] - e4[i]) == 0.0);
  }
}

TEST_CASE("boost along z at 0.6c") {
  const PhysicalConstants kc = natural_units();
  const SpinorSet s = build_spinors({0.0, 0.0, 0.6}, 1.0, kc);
  CHECK(s.gamma == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(s.p[2] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(s.n == doctest::Approx(std::sqrt(2.25 / 2.0)).epsilon(1e-12));

  const DiracMatrices& d = dirac_matrices();
  CHECK(std::abs(bilinear(s.u1, s.u1) - Complex{1.25, 0.0}) < 1e-12);
  CHECK(std::abs(bilinear(s.u1, d.beta, s.u1) - Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(bilinear(s.v1, d.beta, s.v1) - Complex{-1.0, 0.0}) < 1e-12);
  CHECK(std::abs(bilinear(s.u1, d.alpha3, s.u1) - Complex{0.75, 0.0}) < 1e-12);
}

TEST_CASE("speeds at or above c are rejected") {
  const PhysicalConstants kc = natural_units();
  CHECK_THROWS_AS(build_spinors({0.0, 0.0, 1.0}, 1.0, kc), ValidationError);
  CHECK_THROWS_AS(build_spinors({0.8, 0.8, 0.0}, 1.0, kc), ValidationError);
  CHECK_THROWS_AS(build_spinors({0.0, 0.0, 0.5}, 0.0, kc), ValidationError);
}

TEST_CASE("relation table at rest is exact to 1e-14") {
  const PhysicalConstants kc = natural_units();
  const RelationReport report = verify_relation_table(build_spinors({0, 0, 0}, 1.0, kc), kc);
  CHECK(report.rows.size() == 24);
  CHECK(report.max_residual <= 1e-14);
}

TEST_CASE("relation table for a mixed-direction boost") {
  const PhysicalConstants kc = natural_units();
  const RelationReport report =
      verify_relation_table(build_spinors({0.3, 0.4, 0.0}, 1.0, kc), kc);
  CHECK(report.max_residual < 1e-12);
}

TEST_CASE("relation table property sweep over random boosts") {
  const PhysicalConstants kc = natural_units();
  std::mt19937_64 rng(160914);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SpinorSet s = build_spinors(random_velocity(rng, 0.99), 1.0, kc);
    worst = std::max(worst, verify_relation_table(s, kc).max_residual);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("u spinors are plane-wave eigenvectors of the free Hamiltonian") {
  const PhysicalConstants kc = natural_units();
  std::mt19937_64 rng(55);
  for (int i = 0; i < 50; ++i) {
    const SpinorSet s = build_spinors(random_velocity(rng, 0.95), 1.0, kc);
    const double scale = s.m * kc.c * kc.c;
    for (const Spinor* u : {&s.u1, &s.u2}) {
      const Spinor hu = dirac_hamiltonian_apply(s.p, s.m, kc, *u);
      double res = 0.0;
      for (int j = 0; j < 4; ++j) res = std::max(res, std::abs(hu[j] - s.E * (*u)[j]));
      CHECK(res < 1e-10 * scale);
    }
  }
}

TEST_CASE("scalar reduction factors") {
  const PhysicalConstants kc = natural_units();
  const double tau_full = 2.0 * std::numbers::pi;  // m c^2 tau / hbar = 2 pi at m = 1
  CHECK(std::abs(scalar_reduction_factor(DiracBranch::UPlus, 1.0, tau_full, kc) -
                 Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(scalar_reduction_factor(DiracBranch::VPlus, 1.0, tau_full, kc) -
                 Complex{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(scalar_reduction_factor(DiracBranch::UPlus, 1.0, tau_full / 2.0, kc) -
                 Complex{-1.0, 0.0}) < 1e-12);
  CHECK(std::abs(scalar_reduction_factor(DiracBranch::VMinus, 1.0, tau_full / 2.0, kc) -
                 Complex{-1.0, 0.0}) < 1e-12);
  // u and v branches rotate in opposite senses.
  const Complex up = scalar_reduction_factor(DiracBranch::UPlus, 1.0, 0.7, kc);
  const Complex vp = scalar_reduction_factor(DiracBranch::VPlus, 1.0, 0.7, kc);
  CHECK(std::abs(up - std::conj(vp)) < 1e-14);
}

TEST_CASE("scalar reduction matches the transported point value on a constant flow") {
  const PhysicalConstants kc = natural_units();
  const double u = 0.6;
  const double gamma = 1.0 / std::sqrt(1.0 - u * u);

  PropagatorConfig cfg;
  cfg.constants = kc;
  cfg.lagrangian = make_fock(mass_wavenumber_from_mass(1.0, kc), kc);
  cfg.field.dim = 1;
  cfg.field.velocity = [gamma, u](const SpacetimePoint&) {
    FlowVelocity v;
    v.dt = gamma;
    v.dx = {gamma * u, 0.0, 0.0};
    return v;
  };
  cfg.field.divergence = [](const SpacetimePoint&) { return 0.0; };

  const auto one = [](const SpacetimePoint&) { return Complex{1.0, 0.0}; };
  for (const double tau : {0.5, 1.0, 3.0, 7.5}) {
    const SpacetimePoint y{gamma * tau, {0.4, 0.0, 0.0}};
    const Complex transported = evolve_point(cfg, one, y, tau);
    const Complex factor = scalar_reduction_factor(DiracBranch::UPlus, 1.0, tau, kc);
    CHECK(std::abs(transported - factor) < 1e-10);
  }
}
