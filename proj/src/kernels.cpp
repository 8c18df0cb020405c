#include "rqte/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace rqte::kernels {

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend detect_backend() {
  if (const char* env = std::getenv("RQTE_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0) {
      return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    }
  }
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend backend = detect_backend();
  return backend;
}

std::complex<double> phasor_sum_scalar(const double* amp, const double* k, const double* omega,
                                       std::size_t n, double x, double t) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = std::fma(k[i], x, -(omega[i] * t));
    re += amp[i] * std::cos(phase);
    im += amp[i] * std::sin(phase);
  }
  return {re, im};
}

double norm_sq_sum_scalar(const std::complex<double>* values, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::norm(values[i]);
  }
  return acc;
}

Moments modulus_moments_scalar(const std::complex<double>* values, std::size_t n,
                               double x0, double dx) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::norm(values[i]);
    const double xi = x0 + static_cast<double>(i) * dx;
    m.m0 += w;
    m.m1 += w * xi;
    m.m2 += w * xi * xi;
  }
  return m;
}

#if !defined(RQTE_HAVE_AVX2)
// Non-x86 build: the avx2 entry points forward to scalar.
// TODO: NEON variants for aarch64; until then other targets run scalar.
std::complex<double> phasor_sum_avx2(const double* amp, const double* k, const double* omega,
                                     std::size_t n, double x, double t) {
  return phasor_sum_scalar(amp, k, omega, n, x, t);
}

double norm_sq_sum_avx2(const std::complex<double>* values, std::size_t n) {
  return norm_sq_sum_scalar(values, n);
}

Moments modulus_moments_avx2(const std::complex<double>* values, std::size_t n,
                             double x0, double dx) {
  return modulus_moments_scalar(values, n, x0, dx);
}
#endif

std::complex<double> phasor_sum(const double* amp, const double* k, const double* omega,
                                std::size_t n, double x, double t) {
  return active_backend() == Backend::Avx2 ? phasor_sum_avx2(amp, k, omega, n, x, t)
                                           : phasor_sum_scalar(amp, k, omega, n, x, t);
}

double norm_sq_sum(const std::complex<double>* values, std::size_t n) {
  return active_backend() == Backend::Avx2 ? norm_sq_sum_avx2(values, n)
                                           : norm_sq_sum_scalar(values, n);
}

Moments modulus_moments(const std::complex<double>* values, std::size_t n, double x0, double dx) {
  return active_backend() == Backend::Avx2 ? modulus_moments_avx2(values, n, x0, dx)
                                           : modulus_moments_scalar(values, n, x0, dx);
}

}  // namespace rqte::kernels
