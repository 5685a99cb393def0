#pragma once

#include <cstddef>

namespace stqm {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Uniform 2D node lattice. Node (i, j) sits at (x0 + i*dx, y0 + j*dy) and is
/// stored at flat index j*nx + i (x fastest).
class Grid2D {
 public:
  static constexpr int kMinNodes = 8;

  Grid2D(int nx, int ny, double dx, double dy, double x0, double y0);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }

  std::size_t size() const { return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_); }
  double cell_area() const { return dx_ * dy_; }

  double x(int i) const { return x0_ + i * dx_; }
  double y(int j) const { return y0_ + j * dy_; }
  double x_max() const { return x(nx_ - 1); }
  double y_max() const { return y(ny_ - 1); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(i);
  }

  bool contains(Point p) const { return p.x >= x0_ && p.x <= x_max() && p.y >= y0_ && p.y <= y_max(); }
  /// Smallest distance from p to any edge of the node extent.
  double distance_to_boundary(Point p) const;
  /// Nyquist wavenumber along the coarser axis.
  double nyquist() const;
  bool is_square() const { return nx_ == ny_ && dx_ == dy_; }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  int nx_;
  int ny_;
  double dx_;
  double dy_;
  double x0_;
  double y0_;
};

/// Validating constructor; throws ConfigError on undersized grids or non-positive spacing.
Grid2D make_grid(int nx, int ny, double dx, double dy, double x0, double y0);

}  // namespace stqm
