#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rqte/core.hpp"

namespace rqte {

/// Complex amplitudes sampled on a uniform 1-D spatial grid at fixed proper
/// time. `t` is the coordinate-time of the slice the grid lives on; it
/// advances together with tau under evolution.
struct WavefunctionGrid {
  double origin = 0.0;
  double spacing = 1.0;
  std::vector<std::complex<double>> values;
  double tau = 0.0;
  double t = 0.0;

  std::size_t size() const { return values.size(); }
  double x_at(std::size_t i) const { return origin + static_cast<double>(i) * spacing; }
  double x_last() const { return values.empty() ? origin : x_at(values.size() - 1); }
};

/// spacing > 0, values non-empty, all amplitudes finite.
void validate_grid(const WavefunctionGrid& g);

/// Grid sampled from f on n nodes starting at `origin`.
WavefunctionGrid sample_grid(double origin, double spacing, std::size_t n,
                             const std::function<std::complex<double>(double)>& f);

/// Piecewise-cubic Lagrange interpolation on the four nearest nodes (stencil
/// clamped at the edges), zero outside the grid hull. Grids with fewer than
/// four nodes degrade to linear / nearest-value interpolation.
class CubicInterpolant {
 public:
  explicit CubicInterpolant(const WavefunctionGrid& g);

  std::complex<double> operator()(double x) const;
  bool in_hull(double x) const;

 private:
  const WavefunctionGrid* grid_;
};

}  // namespace rqte
