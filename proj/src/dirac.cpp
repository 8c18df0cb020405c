#include "rqte/dirac.hpp"

#include <cmath>

namespace rqte {

namespace {

using C = std::complex<double>;

constexpr C kZero{0.0, 0.0};
constexpr C kOne{1.0, 0.0};
constexpr C kI{0.0, 1.0};

DiracMatrices build_matrices() {
  DiracMatrices d;
  d.beta = {{{kOne, kZero, kZero, kZero},
             {kZero, kOne, kZero, kZero},
             {kZero, kZero, -kOne, kZero},
             {kZero, kZero, kZero, -kOne}}};
  d.alpha1 = {{{kZero, kZero, kZero, kOne},
               {kZero, kZero, kOne, kZero},
               {kZero, kOne, kZero, kZero},
               {kOne, kZero, kZero, kZero}}};
  d.alpha2 = {{{kZero, kZero, kZero, -kI},
               {kZero, kZero, kI, kZero},
               {kZero, -kI, kZero, kZero},
               {kI, kZero, kZero, kZero}}};
  d.alpha3 = {{{kZero, kZero, kOne, kZero},
               {kZero, kZero, kZero, -kOne},
               {kOne, kZero, kZero, kZero},
               {kZero, -kOne, kZero, kZero}}};
  return d;
}

}  // namespace

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices d = build_matrices();
  return d;
}

SpinorSet build_spinors(const std::array<double, 3>& v, double m, const PhysicalConstants& k) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("build_spinors: m must be positive and finite");
  }
  const double c = k.c;
  const double speed_sq = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (!(speed_sq < c * c)) {
    throw ValidationError("build_spinors: |v| must be strictly below c");
  }

  SpinorSet s;
  s.m = m;
  s.v = v;
  s.gamma = 1.0 / std::sqrt(1.0 - speed_sq / (c * c));
  s.E = m * c * c * s.gamma;
  for (int j = 0; j < 3; ++j) s.p[j] = m * s.gamma * v[j];
  const double denom = s.E + m * c * c;
  s.n = std::sqrt(denom / (2.0 * m * c * c));

  const double a = s.p[2] * c / denom;
  const C b_plus{s.p[0] * c / denom, s.p[1] * c / denom};
  const C b_minus{s.p[0] * c / denom, -s.p[1] * c / denom};

  s.u1 = {s.n * kOne, kZero, s.n * a, s.n * b_plus};
  s.u2 = {kZero, s.n * kOne, s.n * b_minus, s.n * (-a)};
  s.v1 = {s.n * a, s.n * b_plus, s.n * kOne, kZero};
  s.v2 = {s.n * b_minus, s.n * (-a), kZero, s.n * kOne};
  return s;
}

std::complex<double> bilinear(const Spinor& left, const Matrix4& M, const Spinor& right) {
  C acc = kZero;
  for (int i = 0; i < 4; ++i) {
    C row = kZero;
    for (int j = 0; j < 4; ++j) row += M[i][j] * right[j];
    acc += std::conj(left[i]) * row;
  }
  return acc;
}

std::complex<double> bilinear(const Spinor& left, const Spinor& right) {
  C acc = kZero;
  for (int i = 0; i < 4; ++i) acc += std::conj(left[i]) * right[i];
  return acc;
}

Spinor matrix_apply(const Matrix4& M, const Spinor& s) {
  Spinor r{kZero, kZero, kZero, kZero};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r[i] += M[i][j] * s[j];
  }
  return r;
}

Matrix4 anticommutator(const Matrix4& A, const Matrix4& B) {
  Matrix4 r{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      C acc = kZero;
      for (int l = 0; l < 4; ++l) acc += A[i][l] * B[l][j] + B[i][l] * A[l][j];
      r[i][j] = acc;
    }
  }
  return r;
}

double max_abs(const Matrix4& M) {
  double r = 0.0;
  for (const auto& row : M) {
    for (const auto& e : row) r = std::max(r, std::abs(e));
  }
  return r;
}

Spinor dirac_hamiltonian_apply(const std::array<double, 3>& p, double m,
                               const PhysicalConstants& k, const Spinor& s) {
  const DiracMatrices& d = dirac_matrices();
  const double c = k.c;
  Spinor r{kZero, kZero, kZero, kZero};
  const Spinor a1 = matrix_apply(d.alpha1, s);
  const Spinor a2 = matrix_apply(d.alpha2, s);
  const Spinor a3 = matrix_apply(d.alpha3, s);
  const Spinor b = matrix_apply(d.beta, s);
  for (int i = 0; i < 4; ++i) {
    r[i] = c * (p[0] * a1[i] + p[1] * a2[i] + p[2] * a3[i]) + m * c * c * b[i];
  }
  return r;
}

RelationReport verify_relation_table(const SpinorSet& s, const PhysicalConstants& k) {
  const DiracMatrices& d = dirac_matrices();
  RelationReport report;

  const auto add = [&report](std::string name, double expected, C value) {
    RelationRow row;
    row.name = std::move(name);
    row.expected = expected;
    row.value = value;
    row.residual = std::abs(value - C{expected, 0.0});
    report.max_residual = std::max(report.max_residual, row.residual);
    report.rows.push_back(std::move(row));
  };

  add("u1.u1", s.gamma, bilinear(s.u1, s.u1));
  add("u2.u2", s.gamma, bilinear(s.u2, s.u2));
  add("v1.v1", s.gamma, bilinear(s.v1, s.v1));
  add("v2.v2", s.gamma, bilinear(s.v2, s.v2));

  add("u1.beta.u1", 1.0, bilinear(s.u1, d.beta, s.u1));
  add("u2.beta.u2", 1.0, bilinear(s.u2, d.beta, s.u2));
  add("v1.beta.v1", -1.0, bilinear(s.v1, d.beta, s.v1));
  add("v2.beta.v2", -1.0, bilinear(s.v2, d.beta, s.v2));

  const std::array<const Matrix4*, 3> alphas{&d.alpha1, &d.alpha2, &d.alpha3};
  const std::array<const Spinor*, 4> spinors{&s.u1, &s.v1, &s.u2, &s.v2};
  const std::array<const char*, 4> spinor_names{"u1", "v1", "u2", "v2"};
  for (int j = 0; j < 3; ++j) {
    const double expected = s.v[j] * s.gamma / k.c;
    for (int si = 0; si < 4; ++si) {
      const std::string name = std::string(spinor_names[si]) + ".alpha" +
                               std::to_string(j + 1) + "." + spinor_names[si];
      add(name, expected, bilinear(*spinors[si], *alphas[j], *spinors[si]));
    }
  }

  add("anticomm(alpha1;beta)", 0.0, C{max_abs(anticommutator(d.alpha1, d.beta)), 0.0});
  add("anticomm(alpha2;beta)", 0.0, C{max_abs(anticommutator(d.alpha2, d.beta)), 0.0});
  add("anticomm(alpha3;beta)", 0.0, C{max_abs(anticommutator(d.alpha3, d.beta)), 0.0});
  add("anticomm(alpha1;alpha2)", 0.0, C{max_abs(anticommutator(d.alpha1, d.alpha2)), 0.0});

  return report;
}

std::complex<double> scalar_reduction_factor(DiracBranch branch, double m, double tau,
                                             const PhysicalConstants& k) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("scalar_reduction_factor: m must be positive and finite");
  }
  const double phase = m * k.c * k.c * tau / k.hbar;
  const bool positive_generator = branch == DiracBranch::UPlus || branch == DiracBranch::UMinus;
  return std::polar(1.0, positive_generator ? -phase : phase);
}

}  // namespace rqte
