#include "stqm/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "stqm/errors.hpp"

namespace stqm {

ComplexField::ComplexField(const Grid2D& grid) : grid_(grid), values_(grid.size(), Complex{}) {}

ComplexField::ComplexField(const Grid2D& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::logic_error("ComplexField: expected " + std::to_string(grid_.size()) + " values, got " +
                           std::to_string(values_.size()));
  }
}

ComplexField ComplexField::from_function(const Grid2D& grid, const std::function<Complex(double, double)>& fn) {
  std::vector<Complex> v(grid.size());
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < grid.nx(); ++i) v[grid.index(i, j)] = fn(grid.x(i), y);
  }
  return ComplexField(grid, std::move(v));
}

bool ComplexField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void require_same_grid(const ComplexField& a, const ComplexField& b, const char* op) {
  if (!(a.grid() == b.grid())) throw std::logic_error(std::string(op) + ": fields live on different grids");
}

namespace {

template <class Fn>
ComplexField map_binary(const ComplexField& a, const ComplexField& b, const char* op, Fn fn) {
  require_same_grid(a, b, op);
  std::vector<Complex> v(a.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(a[k], b[k]);
  return ComplexField(a.grid(), std::move(v));
}

template <class Fn>
ComplexField map_unary(const ComplexField& f, Fn fn) {
  std::vector<Complex> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = fn(f[k]);
  return ComplexField(f.grid(), std::move(v));
}

}  // namespace

ComplexField conj(const ComplexField& f) {
  return map_unary(f, [](Complex z) { return std::conj(z); });
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  return map_binary(a, b, "operator+", [](Complex x, Complex y) { return x + y; });
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  return map_binary(a, b, "operator-", [](Complex x, Complex y) { return x - y; });
}

ComplexField operator*(Complex s, const ComplexField& f) {
  return map_unary(f, [s](Complex z) { return s * z; });
}

ComplexField multiply(const ComplexField& a, const ComplexField& b) {
  return map_binary(a, b, "multiply", [](Complex x, Complex y) { return x * y; });
}

ComplexField abs_field(const ComplexField& f) {
  return map_unary(f, [](Complex z) { return Complex(std::abs(z), 0.0); });
}

Complex inner_product(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b, "inner_product");
  Complex sum{};
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
  return sum * a.grid().cell_area();
}

double norm_squared(const ComplexField& f) {
  double sum = 0.0;
  for (Complex z : f.values()) sum += std::norm(z);
  return sum * f.grid().cell_area();
}

double norm(const ComplexField& f) { return std::sqrt(norm_squared(f)); }

double l2_distance(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b, "l2_distance");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::norm(a[k] - b[k]);
  return std::sqrt(sum * a.grid().cell_area());
}

double max_abs_difference(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b, "max_abs_difference");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

Complex integrate(const ComplexField& f) {
  Complex sum{};
  for (Complex z : f.values()) sum += z;
  return sum * f.grid().cell_area();
}

double boundary_mass_fraction(const ComplexField& f, int margin) {
  const Grid2D& g = f.grid();
  double edge = 0.0;
  double total = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const bool edge_row = j < margin || j >= g.ny() - margin;
    for (int i = 0; i < g.nx(); ++i) {
      const double m = std::norm(f(i, j));
      total += m;
      if (edge_row || i < margin || i >= g.nx() - margin) edge += m;
    }
  }
  return total > 0.0 ? edge / total : 0.0;
}

void check_boundary_mass(const ComplexField& f, const char* what, std::optional<double> time) {
  const double frac = boundary_mass_fraction(f);
  if (frac > kBoundaryMassLimit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ": boundary mass fraction %.3e exceeds %.0e", frac, kBoundaryMassLimit);
    throw GeometryError(std::string(what) + buf, time);
  }
}

}  // namespace stqm
