#include "rqte/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rqte/kernels.hpp"

namespace rqte {

namespace {

double gamma_of_k(double k, double m, const PhysicalConstants& kc) {
  const double r = kc.hbar * k / (m * kc.c);
  return std::sqrt(1.0 + r * r);
}

}  // namespace

double dispersion_omega(double k, double u, double m, const PhysicalConstants& kc) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("dispersion_omega: m must be positive and finite");
  }
  const double c = kc.c;
  if (!(std::abs(u) < c)) {
    throw ValidationError("dispersion_omega: |u| must be strictly below c");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - (u / c) * (u / c));
  return k * u + m * c * c / (kc.hbar * gamma);
}

DeBroglieResult debroglie_check(double k, double m, const PhysicalConstants& kc) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw ValidationError("debroglie_check: m must be positive and finite");
  }
  DeBroglieResult r;
  const double gamma = gamma_of_k(k, m, kc);
  const double u = kc.hbar * k / (m * gamma);
  const double omega = dispersion_omega(k, u, m, kc);

  r.wave = PlaneWaveParams{k, omega, u, gamma, m};
  r.energy = kc.hbar * omega;
  r.residual_dispersion = kc.hbar * omega - m * kc.c * kc.c * gamma;
  r.residual_momentum = m * gamma * u - kc.hbar * k;
  return r;
}

PacketQuadrature::PacketQuadrature(const WavepacketParams& params, const PhysicalConstants& kc)
    : params_(params), constants_(kc) {
  if (!(params.sigma > 0.0) || !std::isfinite(params.sigma)) {
    throw ValidationError("wavepacket: sigma must be positive and finite");
  }
  if (!(params.m > 0.0) || !std::isfinite(params.m)) {
    throw ValidationError("wavepacket: m must be positive and finite");
  }
  if (params.nodes < 256) {
    throw ValidationError("wavepacket: at least 256 quadrature nodes required");
  }
  // Spectral tail beyond the grid must be negligible for the quadrature to
  // stand in for the full-line integral.
  const double tail = std::exp(-0.5 * params.halfwidth_sigmas * params.halfwidth_sigmas);
  if (!(tail <= 1e-12)) {
    throw ValidationError("wavepacket: k grid too narrow, spectral tail mass above 1e-12");
  }

  const std::size_t n = static_cast<std::size_t>(params.nodes);
  amp_.resize(n);
  k_.resize(n);
  omega_.resize(n);

  const double half = params.halfwidth_sigmas / params.sigma;
  const double dk = 2.0 * half / static_cast<double>(n - 1);
  const double prefactor = 2.0 * std::numbers::pi * params.sigma * params.amplitude;
  const double m = params.m;
  const double c = kc.c;

  min_energy_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double k = params.k_center - half + static_cast<double>(i) * dk;
    const double dev = k - params.k_center;
    double weight = (i == 0 || i + 1 == n) ? 0.5 : 1.0;

    double omega;
    if (params.mode == PacketMode::ExactGamma) {
      omega = m * c * c * gamma_of_k(k, m, kc) / kc.hbar;
    } else {
      omega = m * c * c / kc.hbar + kc.hbar * k * k / (2.0 * m);
    }

    k_[i] = k;
    omega_[i] = omega;
    amp_[i] = prefactor * weight * dk * std::exp(-0.5 * params.sigma * params.sigma * dev * dev);
    min_energy_ = std::min(min_energy_, kc.hbar * omega);
  }

  if (params.mode == PacketMode::ExactGamma) {
    u_center_ = kc.hbar * params.k_center / (m * gamma_of_k(params.k_center, m, kc));
  } else {
    u_center_ = kc.hbar * params.k_center / m;
  }
}

std::complex<double> PacketQuadrature::operator()(double x, double t) const {
  return kernels::phasor_sum(amp_.data(), k_.data(), omega_.data(), k_.size(), x, t);
}

std::complex<double> relativistic_packet_quadrature(const WavepacketParams& params,
                                                    double x, double t,
                                                    const PhysicalConstants& kc) {
  return PacketQuadrature(params, kc)(x, t);
}

std::complex<double> schrodinger_packet_closed_form(double sigma, double m, double x, double t,
                                                    const PhysicalConstants& kc,
                                                    double amplitude) {
  if (!(sigma > 0.0) || !(m > 0.0)) {
    throw ValidationError("schrodinger_packet_closed_form: sigma and m must be positive");
  }
  const std::complex<double> denom{sigma * sigma, t * kc.hbar / m};
  const std::complex<double> envelope =
      std::sqrt(sigma * sigma / denom) * std::exp(-x * x / (2.0 * denom));
  return amplitude * std::polar(1.0, -m * kc.c * kc.c * t / kc.hbar) * envelope;
}

double packet_width(const WavefunctionGrid& g) {
  validate_grid(g);
  const kernels::Moments m =
      kernels::modulus_moments(g.values.data(), g.values.size(), g.origin, g.spacing);
  if (!(m.m0 > 0.0)) {
    throw ValidationError("packet_width: grid has zero norm");
  }
  const double mean = m.m1 / m.m0;
  const double var = std::max(0.0, m.m2 / m.m0 - mean * mean);
  return std::sqrt(2.0 * var);
}

WavefunctionGrid sample_packet(const PacketQuadrature& q, double t, double x_center,
                               double half_span, std::size_t n) {
  if (n < 2 || !(half_span > 0.0)) {
    throw ValidationError("sample_packet: need n >= 2 and positive half_span");
  }
  WavefunctionGrid g;
  g.origin = x_center - half_span;
  g.spacing = 2.0 * half_span / static_cast<double>(n - 1);
  g.tau = t;
  g.t = t;
  g.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.values[i] = q(g.x_at(i), t);
  }
  return g;
}

double packet_width_scan(const PacketQuadrature& q, double t) {
  const WavepacketParams& p = q.params();
  const double sigma = p.sigma;
  // Nonrelativistic width bound: no admissible packet spreads faster.
  const double spread = t * q.constants().hbar / (p.m * sigma);
  const double bound = std::sqrt(sigma * sigma + spread * spread);
  const double half_span = 8.0 * bound;
  const double spacing = sigma / 8.0;
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * half_span / spacing)) + 1;
  const WavefunctionGrid g = sample_packet(q, t, q.center_velocity() * t, half_span, n);
  return packet_width(g);
}

}  // namespace rqte
