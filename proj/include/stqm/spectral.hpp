#pragma once

#include <functional>
#include <utility>

#include "stqm/field.hpp"

namespace stqm {

/// Multiplies the spectrum of f by m(kx, ky) and transforms back.
ComplexField apply_spectral_multiplier(const ComplexField& f, const std::function<Complex(double, double)>& m);

/// (df/dx, df/dy) by spectral differentiation.
std::pair<ComplexField, ComplexField> spectral_gradient(const ComplexField& f);

/// d(fx)/dx + d(fy)/dy by spectral differentiation.
ComplexField spectral_divergence(const ComplexField& fx, const ComplexField& fy);

/// g(r) = f(r - shift) on the periodic grid, exact for band-limited fields.
ComplexField spectral_translate(const ComplexField& f, Point shift);

/// Position-space inner product evaluated in wavenumber space (Parseval).
Complex spectral_inner_product(const ComplexField& a, const ComplexField& b);

/// Half-open cone test on the wavevector direction: -half_angle <= angle(k) - axis < half_angle,
/// after wrapping the difference into [-pi, pi). The k = 0 mode is in no cone.
bool in_momentum_cone(double kx, double ky, double axis_angle, double half_angle);

/// Splits f into the part whose wavevectors lie in the cone and the remainder.
/// The masks are complementary, so first + second reproduces f.
std::pair<ComplexField, ComplexField> momentum_cone_split(const ComplexField& f, double axis_angle,
                                                          double half_angle);

/// Fraction of the spectral mass of f that lies in the cone (0 for a zero field).
double momentum_cone_fraction(const ComplexField& f, double axis_angle, double half_angle);

}  // namespace stqm
