#include "stqm/gaussian.hpp"

#include <cmath>
#include <string>

#include "stqm/errors.hpp"
#include "stqm/spectral.hpp"

namespace stqm {

double GaussianSpec::momentum() const { return std::hypot(kx, ky); }

ComplexField gaussian_packet(const Grid2D& grid, const GaussianSpec& spec) {
  if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) throw ConfigError("gaussian sigma must be positive");
  const double margin = grid.distance_to_boundary(spec.center());
  if (margin < kPacketBoundaryMarginSigmas * spec.sigma) {
    throw GeometryError("gaussian packet at (" + std::to_string(spec.cx) + ", " + std::to_string(spec.cy) +
                        ") is " + std::to_string(margin / spec.sigma) + " sigma from the grid edge, need " +
                        std::to_string(kPacketBoundaryMarginSigmas));
  }
  const double inv4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
  std::vector<Complex> v(grid.size());
  double sum = 0.0;
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    const double ey = (y - spec.cy) * (y - spec.cy);
    for (int i = 0; i < grid.nx(); ++i) {
      const double x = grid.x(i);
      const double env = std::exp(-((x - spec.cx) * (x - spec.cx) + ey) * inv4s2);
      const Complex z = std::polar(env, spec.kx * x + spec.ky * y);
      v[grid.index(i, j)] = z;
      sum += env * env;
    }
  }
  const double scale = 1.0 / std::sqrt(sum * grid.cell_area());
  for (Complex& z : v) z *= scale;
  return ComplexField(grid, std::move(v));
}

Point mean_position(const ComplexField& f) {
  const Grid2D& g = f.grid();
  double w = 0.0, sx = 0.0, sy = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double m = std::norm(f(i, j));
      w += m;
      sx += m * g.x(i);
      sy += m * g.y(j);
    }
  }
  if (w == 0.0) return {};
  return {sx / w, sy / w};
}

Point position_spread(const ComplexField& f) {
  const Grid2D& g = f.grid();
  const Point c = mean_position(f);
  double w = 0.0, vx = 0.0, vy = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double m = std::norm(f(i, j));
      w += m;
      vx += m * (g.x(i) - c.x) * (g.x(i) - c.x);
      vy += m * (g.y(j) - c.y) * (g.y(j) - c.y);
    }
  }
  if (w == 0.0) return {};
  return {std::sqrt(vx / w), std::sqrt(vy / w)};
}

Point mean_momentum(const ComplexField& f) {
  const double n2 = norm_squared(f);
  if (n2 == 0.0) return {};
  auto [gx, gy] = spectral_gradient(f);
  // <k> = <f, -i grad f> / <f, f>
  const Complex px = Complex(0.0, -1.0) * inner_product(f, gx);
  const Complex py = Complex(0.0, -1.0) * inner_product(f, gy);
  return {px.real() / n2, py.real() / n2};
}

}  // namespace stqm
