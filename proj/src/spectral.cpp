#include "stqm/spectral.hpp"

#include <cmath>
#include <numbers>

#include "stqm/fft.hpp"

namespace stqm {

ComplexField apply_spectral_multiplier(const ComplexField& f, const std::function<Complex(double, double)>& m) {
  const Grid2D& g = f.grid();
  std::vector<Complex> spec = forward_fft(f);
  const auto kx = wavenumbers(g.nx(), g.dx());
  const auto ky = wavenumbers(g.ny(), g.dy());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) spec[g.index(i, j)] *= m(kx[i], ky[j]);
  }
  return inverse_fft(g, std::move(spec));
}

std::pair<ComplexField, ComplexField> spectral_gradient(const ComplexField& f) {
  const Grid2D& g = f.grid();
  const std::vector<Complex> spec = forward_fft(f);
  const auto kx = wavenumbers(g.nx(), g.dx());
  const auto ky = wavenumbers(g.ny(), g.dy());
  std::vector<Complex> sx(spec.size());
  std::vector<Complex> sy(spec.size());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(i, j);
      sx[k] = Complex(0.0, kx[i]) * spec[k];
      sy[k] = Complex(0.0, ky[j]) * spec[k];
    }
  }
  return {inverse_fft(g, std::move(sx)), inverse_fft(g, std::move(sy))};
}

ComplexField spectral_divergence(const ComplexField& fx, const ComplexField& fy) {
  require_same_grid(fx, fy, "spectral_divergence");
  const Grid2D& g = fx.grid();
  const std::vector<Complex> sx = forward_fft(fx);
  const std::vector<Complex> sy = forward_fft(fy);
  const auto kx = wavenumbers(g.nx(), g.dx());
  const auto ky = wavenumbers(g.ny(), g.dy());
  std::vector<Complex> out(sx.size());
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(i, j);
      out[k] = Complex(0.0, kx[i]) * sx[k] + Complex(0.0, ky[j]) * sy[k];
    }
  }
  return inverse_fft(g, std::move(out));
}

ComplexField spectral_translate(const ComplexField& f, Point shift) {
  if (shift.x == 0.0 && shift.y == 0.0) return f;
  return apply_spectral_multiplier(f, [shift](double kx, double ky) {
    return std::polar(1.0, -(kx * shift.x + ky * shift.y));
  });
}

Complex spectral_inner_product(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b, "spectral_inner_product");
  const std::vector<Complex> sa = forward_fft(a);
  const std::vector<Complex> sb = forward_fft(b);
  Complex sum{};
  for (std::size_t k = 0; k < sa.size(); ++k) sum += std::conj(sa[k]) * sb[k];
  return sum * a.grid().cell_area() / static_cast<double>(sa.size());
}

bool in_momentum_cone(double kx, double ky, double axis_angle, double half_angle) {
  if (kx == 0.0 && ky == 0.0) return false;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double diff = std::atan2(ky, kx) - axis_angle;
  diff -= two_pi * std::floor((diff + std::numbers::pi) / two_pi);
  return diff >= -half_angle && diff < half_angle;
}

std::pair<ComplexField, ComplexField> momentum_cone_split(const ComplexField& f, double axis_angle,
                                                          double half_angle) {
  ComplexField inside = apply_spectral_multiplier(f, [=](double kx, double ky) {
    return in_momentum_cone(kx, ky, axis_angle, half_angle) ? Complex(1.0) : Complex(0.0);
  });
  ComplexField rest = f - inside;
  return {std::move(inside), std::move(rest)};
}

double momentum_cone_fraction(const ComplexField& f, double axis_angle, double half_angle) {
  const Grid2D& g = f.grid();
  const std::vector<Complex> spec = forward_fft(f);
  const auto kx = wavenumbers(g.nx(), g.dx());
  const auto ky = wavenumbers(g.ny(), g.dy());
  double in = 0.0;
  double total = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double m = std::norm(spec[g.index(i, j)]);
      total += m;
      if (in_momentum_cone(kx[i], ky[j], axis_angle, half_angle)) in += m;
    }
  }
  return total > 0.0 ? in / total : 0.0;
}

}  // namespace stqm
