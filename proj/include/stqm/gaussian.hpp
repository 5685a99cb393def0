#pragma once

#include "stqm/field.hpp"

namespace stqm {

/// Traveling Gaussian packet. sigma is the standard deviation of |psi|^2 per axis.
struct GaussianSpec {
  double cx = 0.0;
  double cy = 0.0;
  double sigma = 1.0;
  double kx = 0.0;
  double ky = 0.0;

  Point center() const { return {cx, cy}; }
  double momentum() const;
  /// Standard deviation of the |psi~(k)|^2 distribution per axis, 1/(2 sigma).
  double momentum_width() const { return 0.5 / sigma; }

  friend bool operator==(const GaussianSpec&, const GaussianSpec&) = default;
};

/// Minimum distance, in units of sigma, between a packet center and any grid edge.
inline constexpr double kPacketBoundaryMarginSigmas = 8.0;

/// N exp(-|r-c|^2 / (4 sigma^2)) exp(i k.r), normalized to unit discrete L2 norm,
/// with no extra constant phase. Throws GeometryError if the center is closer
/// than 8 sigma to an edge, ConfigError if sigma <= 0.
ComplexField gaussian_packet(const Grid2D& grid, const GaussianSpec& spec);

/// Probability-weighted mean position of |f|^2.
Point mean_position(const ComplexField& f);
/// Standard deviations of |f|^2 along x and y.
Point position_spread(const ComplexField& f);
/// Expectation of the wavevector, from spectral gradients.
Point mean_momentum(const ComplexField& f);

}  // namespace stqm
