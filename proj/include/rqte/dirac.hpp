#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "rqte/core.hpp"

namespace rqte {

using Spinor = std::array<std::complex<double>, 4>;
using Matrix4 = std::array<Spinor, 4>;

/// The standard (Dirac representation) alpha and beta matrices.
struct DiracMatrices {
  Matrix4 beta;
  Matrix4 alpha1;
  Matrix4 alpha2;
  Matrix4 alpha3;
};

const DiracMatrices& dirac_matrices();

/// The four plane-wave spinors for a frame moving with velocity v, plus the
/// kinematics they were built from. E = m c^2 gamma, p = m gamma v,
/// n = sqrt((E + m c^2) / (2 m c^2)).
struct SpinorSet {
  Spinor u1, u2, v1, v2;
  double n = 1.0;
  double E = 0.0;
  double gamma = 1.0;
  double m = 0.0;
  std::array<double, 3> p{0.0, 0.0, 0.0};
  std::array<double, 3> v{0.0, 0.0, 0.0};
};

/// |v| must be strictly below c.
SpinorSet build_spinors(const std::array<double, 3>& v, double m, const PhysicalConstants& k);

/// left^H * M * right (conjugate transpose on the left).
std::complex<double> bilinear(const Spinor& left, const Matrix4& M, const Spinor& right);
/// left^H * right.
std::complex<double> bilinear(const Spinor& left, const Spinor& right);

Spinor matrix_apply(const Matrix4& M, const Spinor& s);
Matrix4 anticommutator(const Matrix4& A, const Matrix4& B);
double max_abs(const Matrix4& M);

/// (c alpha.p + beta m c^2) s — the free Dirac Hamiltonian applied to s.
Spinor dirac_hamiltonian_apply(const std::array<double, 3>& p, double m,
                               const PhysicalConstants& k, const Spinor& s);

struct RelationRow {
  std::string name;
  double expected = 0.0;
  std::complex<double> value;
  double residual = 0.0;
};

struct RelationReport {
  std::vector<RelationRow> rows;
  double max_residual = 0.0;
};

/// Evaluates the 24 spinor relations: four norms (= gamma), four beta
/// bilinears (= +-1), twelve alpha bilinears (= v_j gamma / c), and four
/// matrix anticommutator spot checks (= 0). Residuals are reported, never
/// thrown.
RelationReport verify_relation_table(const SpinorSet& s, const PhysicalConstants& k);

enum class DiracBranch { UPlus, UMinus, VPlus, VMinus };

/// psi(tau)/psi(0) for the scalar amplitude riding on a fixed spinor:
/// exp(-i m c^2 tau / hbar) for the u branches, exp(+i m c^2 tau / hbar)
/// for the v branches.
std::complex<double> scalar_reduction_factor(DiracBranch branch, double m, double tau,
                                             const PhysicalConstants& k);

}  // namespace rqte
