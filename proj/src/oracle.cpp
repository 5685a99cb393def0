#include "stqm/oracle.hpp"

#include <cmath>
#include <numbers>

namespace stqm {
namespace {

using std::numbers::pi;

// One axis of the evolved packet: amp * exp(-beta (x - mean)^2) * exp(i k x).
struct AxisGaussian {
  Complex amp;
  Complex beta;
  double mean;
  double k;
};

AxisGaussian evolve_axis(double c, double sigma, double k, double t) {
  const Complex w(1.0, t / (2.0 * sigma * sigma));
  AxisGaussian g;
  g.amp = std::pow(2.0 * pi * sigma * sigma, -0.25) / std::sqrt(w) * std::polar(1.0, -0.5 * k * k * t);
  g.beta = 1.0 / (4.0 * sigma * sigma * w);
  g.mean = c + k * t;
  g.k = k;
  return g;
}

Complex axis_value(const AxisGaussian& g, double x) {
  const double d = x - g.mean;
  return g.amp * std::exp(-g.beta * d * d + Complex(0.0, g.k * x));
}

// Integral of conj(g1) g2 over the real line.
Complex axis_overlap(const AxisGaussian& g1, const AxisGaussian& g2) {
  const Complex b1 = std::conj(g1.beta);
  const Complex b = b1 + g2.beta;
  const Complex d = 2.0 * b1 * g1.mean + 2.0 * g2.beta * g2.mean + Complex(0.0, g2.k - g1.k);
  const Complex e = -b1 * g1.mean * g1.mean - g2.beta * g2.mean * g2.mean;
  return std::conj(g1.amp) * g2.amp * std::sqrt(pi / b) * std::exp(d * d / (4.0 * b) + e);
}

}  // namespace

FreePacketState oracle_free_gaussian(const GaussianSpec& spec, double t) {
  const double tau = t / (2.0 * spec.sigma * spec.sigma);
  FreePacketState s;
  s.center = {spec.cx + spec.kx * t, spec.cy + spec.ky * t};
  s.width = spec.sigma * Complex(1.0, tau);
  s.sigma = spec.sigma * std::sqrt(1.0 + tau * tau);
  s.phase = -0.5 * (spec.kx * spec.kx + spec.ky * spec.ky) * t;
  return s;
}

ComplexField oracle_field(const Grid2D& grid, const GaussianSpec& spec, double t) {
  const AxisGaussian gx = evolve_axis(spec.cx, spec.sigma, spec.kx, t);
  const AxisGaussian gy = evolve_axis(spec.cy, spec.sigma, spec.ky, t);
  std::vector<Complex> px(static_cast<std::size_t>(grid.nx()));
  std::vector<Complex> py(static_cast<std::size_t>(grid.ny()));
  for (int i = 0; i < grid.nx(); ++i) px[i] = axis_value(gx, grid.x(i));
  for (int j = 0; j < grid.ny(); ++j) py[j] = axis_value(gy, grid.y(j));
  std::vector<Complex> v(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    for (int i = 0; i < grid.nx(); ++i) v[grid.index(i, j)] = px[i] * py[j];
  }
  return ComplexField(grid, std::move(v));
}

Complex oracle_overlap(const GaussianSpec& a, double ta, const GaussianSpec& b, double tb) {
  return axis_overlap(evolve_axis(a.cx, a.sigma, a.kx, ta), evolve_axis(b.cx, b.sigma, b.kx, tb)) *
         axis_overlap(evolve_axis(a.cy, a.sigma, a.ky, ta), evolve_axis(b.cy, b.sigma, b.ky, tb));
}

}  // namespace stqm
