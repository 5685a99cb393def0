#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stqm/grid.hpp"

namespace stqm {

using Complex = std::complex<double>;

/// Complex scalar sampled on every node of a Grid2D. Values are fixed at
/// construction; every operation in the library returns a new field.
class ComplexField {
 public:
  explicit ComplexField(const Grid2D& grid);
  ComplexField(const Grid2D& grid, std::vector<Complex> values);

  /// Samples fn(x, y) at every node.
  static ComplexField from_function(const Grid2D& grid, const std::function<Complex(double, double)>& fn);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Complex operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  Complex operator[](std::size_t k) const { return values_[k]; }

  bool all_finite() const;

  /// Moves the storage out; the field is left empty.
  std::vector<Complex> release() && { return std::move(values_); }

 private:
  Grid2D grid_;
  std::vector<Complex> values_;
};

/// Throws std::logic_error when two fields live on different grids.
void require_same_grid(const ComplexField& a, const ComplexField& b, const char* op);

ComplexField conj(const ComplexField& f);
ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex s, const ComplexField& f);
/// Node-wise product.
ComplexField multiply(const ComplexField& a, const ComplexField& b);
ComplexField abs_field(const ComplexField& f);

/// Sum of conj(a) * b * dx * dy.
Complex inner_product(const ComplexField& a, const ComplexField& b);
double norm_squared(const ComplexField& f);
double norm(const ComplexField& f);
/// Sum of |a - b|^2 dx dy, square-rooted.
double l2_distance(const ComplexField& a, const ComplexField& b);
double max_abs_difference(const ComplexField& a, const ComplexField& b);
/// Sum of f * dx * dy (no conjugation).
Complex integrate(const ComplexField& f);

/// Fraction of |f|^2 mass within `margin` nodes of any grid edge (0 for a zero field).
double boundary_mass_fraction(const ComplexField& f, int margin = 4);

inline constexpr double kBoundaryMassLimit = 1e-10;

/// Throws GeometryError when boundary_mass_fraction exceeds kBoundaryMassLimit.
void check_boundary_mass(const ComplexField& f, const char* what, std::optional<double> time = std::nullopt);

}  // namespace stqm
