#include "rqte/grid.hpp"

#include <cmath>

namespace rqte {

void validate_grid(const WavefunctionGrid& g) {
  if (!(g.spacing > 0.0) || !std::isfinite(g.spacing)) {
    throw ValidationError("grid: spacing must be positive and finite");
  }
  if (g.values.empty()) {
    throw ValidationError("grid: values must be non-empty");
  }
  if (!std::isfinite(g.origin)) {
    throw ValidationError("grid: origin must be finite");
  }
  for (const auto& v : g.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ValidationError("grid: amplitudes must be finite");
    }
  }
}

WavefunctionGrid sample_grid(double origin, double spacing, std::size_t n,
                             const std::function<std::complex<double>(double)>& f) {
  WavefunctionGrid g;
  g.origin = origin;
  g.spacing = spacing;
  g.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.values[i] = f(g.x_at(i));
  }
  validate_grid(g);
  return g;
}

CubicInterpolant::CubicInterpolant(const WavefunctionGrid& g) : grid_(&g) {
  validate_grid(g);
}

bool CubicInterpolant::in_hull(double x) const {
  const double u = (x - grid_->origin) / grid_->spacing;
  return u >= 0.0 && u <= static_cast<double>(grid_->size() - 1);
}

std::complex<double> CubicInterpolant::operator()(double x) const {
  const WavefunctionGrid& g = *grid_;
  const std::size_t n = g.size();
  const double u = (x - g.origin) / g.spacing;
  if (u < 0.0 || u > static_cast<double>(n - 1)) {
    return {0.0, 0.0};
  }
  if (n == 1) return g.values[0];
  if (n < 4) {
    const auto i = std::min(static_cast<std::size_t>(u), n - 2);
    const double f = u - static_cast<double>(i);
    return g.values[i] * (1.0 - f) + g.values[i + 1] * f;
  }

  const auto i = static_cast<std::size_t>(u);
  const std::size_t j0 = (i == 0) ? 0 : std::min(i - 1, n - 4);
  const double s = u - static_cast<double>(j0);

  // Lagrange basis on stencil offsets {0,1,2,3}.
  const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;

  return w0 * g.values[j0] + w1 * g.values[j0 + 1] + w2 * g.values[j0 + 2] +
         w3 * g.values[j0 + 3];
}

}  // namespace rqte
