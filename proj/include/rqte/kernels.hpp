#pragma once

#include <complex>
#include <cstddef>

namespace rqte::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend chosen once at startup: AVX2 when the CPU supports AVX2+FMA,
/// scalar otherwise. The environment variable RQTE_KERNELS=scalar|avx2
/// overrides the choice; requesting avx2 on unsupported hardware falls back
/// to scalar.
Backend active_backend();
const char* backend_name(Backend b);
bool avx2_supported();

struct Moments {
  double m0 = 0.0;  // sum w_i
  double m1 = 0.0;  // sum w_i * x_i
  double m2 = 0.0;  // sum w_i * x_i^2
};

/// sum_i amp[i] * exp(i*(k[i]*x - omega[i]*t)).
///
/// Every backend forms the phase as fma(k[i], x, -(omega[i]*t)) so results
/// agree to sin/cos accuracy across backends. |phase| must stay below 1e9;
/// the AVX2 path falls back to libm for any element outside that range.
std::complex<double> phasor_sum(const double* amp, const double* k, const double* omega,
                                std::size_t n, double x, double t);

/// sum_i |values[i]|^2.
double norm_sq_sum(const std::complex<double>* values, std::size_t n);

/// Moments of w_i = |values[i]|^2 against the abscissa x_i = x0 + i*dx.
Moments modulus_moments(const std::complex<double>* values, std::size_t n,
                        double x0, double dx);

// Fixed-backend entry points; the dispatched functions above select between
// them. Exposed so the equivalence tests can drive both paths explicitly.
std::complex<double> phasor_sum_scalar(const double* amp, const double* k, const double* omega,
                                       std::size_t n, double x, double t);
double norm_sq_sum_scalar(const std::complex<double>* values, std::size_t n);
Moments modulus_moments_scalar(const std::complex<double>* values, std::size_t n,
                               double x0, double dx);

// On non-x86 builds these forward to the scalar implementations.
std::complex<double> phasor_sum_avx2(const double* amp, const double* k, const double* omega,
                                     std::size_t n, double x, double t);
double norm_sq_sum_avx2(const std::complex<double>* values, std::size_t n);
Moments modulus_moments_avx2(const std::complex<double>* values, std::size_t n,
                             double x0, double dx);

}  // namespace rqte::kernels
