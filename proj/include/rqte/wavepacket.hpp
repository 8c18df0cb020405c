#pragma once

#include <complex>
#include <vector>

#include "rqte/core.hpp"
#include "rqte/grid.hpp"

namespace rqte {

/// One plane-wave mode: wavenumber, angular frequency, group velocity,
/// Lorentz factor and the mass they were solved for.
struct PlaneWaveParams {
  double k = 0.0;
  double omega = 0.0;
  double u = 0.0;
  double gamma = 1.0;
  double m = 0.0;
};

/// omega = k u + m c^2 / (hbar gamma(u)). |u| must be strictly below c.
double dispersion_omega(double k, double u, double m, const PhysicalConstants& kc);

struct DeBroglieResult {
  PlaneWaveParams wave;
  double energy = 0.0;               // hbar * omega
  double residual_dispersion = 0.0;  // hbar omega - m c^2 gamma
  double residual_momentum = 0.0;    // m gamma u - hbar k
};

/// Solves u = hbar k / (m gamma(u)), i.e. u = hbar k / sqrt(m^2 + hbar^2 k^2 / c^2),
/// then reports omega from the dispersion relation and both closure residuals.
DeBroglieResult debroglie_check(double k, double m, const PhysicalConstants& kc);

/// ExactGamma uses per-node u(k) and gamma(k) with no small-width
/// approximation. NonRelativistic is the gamma->1 limit: u = hbar k / m and
/// hbar omega = m c^2 + hbar^2 k^2 / (2m), which integrates to the familiar
/// free-particle spreading law.
enum class PacketMode { ExactGamma, NonRelativistic };

struct WavepacketParams {
  double sigma = 1.0;           // initial modulus width
  double m = 1.0;
  double k_center = 0.0;        // spectral center; 0 is a packet at rest
  double amplitude = 1.0;
  int nodes = 2048;             // quadrature nodes over k
  double halfwidth_sigmas = 8.0;  // k grid spans k_center +- this / sigma
  PacketMode mode = PacketMode::ExactGamma;
};

/// Trapezoid quadrature of the wavepacket over its spectral nodes,
///   psi(x,t) = 2 pi sigma A sum_k w_k exp(-sigma^2 (k-k_c)^2 / 2)
///              * exp(i (k x - omega(k) t)).
/// Node arrays are precomputed once; evaluation is a single phasor sum.
class PacketQuadrature {
 public:
  PacketQuadrature(const WavepacketParams& params, const PhysicalConstants& kc);

  std::complex<double> operator()(double x, double t) const;

  double center_velocity() const { return u_center_; }
  /// Smallest hbar*omega over the nodes; positive for every admissible packet.
  double min_node_energy() const { return min_energy_; }
  const std::vector<double>& k_nodes() const { return k_; }
  const WavepacketParams& params() const { return params_; }
  const PhysicalConstants& constants() const { return constants_; }

 private:
  WavepacketParams params_;
  PhysicalConstants constants_;
  std::vector<double> amp_;
  std::vector<double> k_;
  std::vector<double> omega_;
  double u_center_ = 0.0;
  double min_energy_ = 0.0;
};

/// One-off evaluation (builds the node arrays each call).
std::complex<double> relativistic_packet_quadrature(const WavepacketParams& params,
                                                    double x, double t,
                                                    const PhysicalConstants& kc);

/// a e^{-i m c^2 t/hbar} (sigma^2/(sigma^2 + i t hbar/m))^{1/2}
///   exp(-x^2 / (2 (sigma^2 + i t hbar/m))).
std::complex<double> schrodinger_packet_closed_form(double sigma, double m, double x, double t,
                                                    const PhysicalConstants& kc,
                                                    double amplitude = 1.0);

/// Gaussian-equivalent modulus width: sqrt(2 * second central moment of
/// |psi|^2). For |psi| = exp(-x^2 / (2 w^2)) this returns w, so the free
/// spreading law reads width(t)^2 = sigma^2 + (t hbar / (m sigma))^2.
double packet_width(const WavefunctionGrid& g);

/// Samples |psi| on a grid tracking the packet center and measures its width.
/// The scan is centered on u(k_center)*t and spans +-8 nonrelativistic width
/// bounds at spacing sigma/8.
double packet_width_scan(const PacketQuadrature& q, double t);

/// Grid of quadrature samples at fixed t (tau stamp = t).
WavefunctionGrid sample_packet(const PacketQuadrature& q, double t, double x_center,
                               double half_span, std::size_t n);

}  // namespace rqte
