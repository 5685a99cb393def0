#pragma once

#include "stqm/field.hpp"
#include "stqm/gaussian.hpp"

namespace stqm {

/// Closed-form free evolution of a Gaussian packet under i dpsi/dt = -1/2 lap psi.
struct FreePacketState {
  Point center;        ///< c + k t
  Complex width;       ///< sigma (1 + i t / (2 sigma^2))
  double sigma = 0.0;  ///< std of |psi|^2: sigma sqrt(1 + (t / (2 sigma^2))^2)
  double phase = 0.0;  ///< dynamical phase -|k|^2 t / 2
};

/// Valid for any real t; negative t evolves backward.
FreePacketState oracle_free_gaussian(const GaussianSpec& spec, double t);

/// The analytic packet psi(r, t) sampled on a grid (continuum normalization).
ComplexField oracle_field(const Grid2D& grid, const GaussianSpec& spec, double t);

/// Continuum overlap <a(ta), b(tb)> of two analytically evolved packets.
Complex oracle_overlap(const GaussianSpec& a, double ta, const GaussianSpec& b, double tb);

}  // namespace stqm
