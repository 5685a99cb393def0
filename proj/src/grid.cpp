#include "stqm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stqm/errors.hpp"

namespace stqm {

Grid2D::Grid2D(int nx, int ny, double dx, double dy, double x0, double y0)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), x0_(x0), y0_(y0) {
  if (nx < kMinNodes || ny < kMinNodes) {
    throw ConfigError("grid needs at least " + std::to_string(kMinNodes) + " nodes per axis, got " +
                      std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw ConfigError("grid spacing must be positive and finite");
  }
  if (!std::isfinite(x0) || !std::isfinite(y0)) {
    throw ConfigError("grid origin must be finite");
  }
}

double Grid2D::distance_to_boundary(Point p) const {
  return std::min({p.x - x0_, x_max() - p.x, p.y - y0_, y_max() - p.y});
}

double Grid2D::nyquist() const { return std::numbers::pi / std::max(dx_, dy_); }

Grid2D make_grid(int nx, int ny, double dx, double dy, double x0, double y0) {
  return Grid2D(nx, ny, dx, dy, x0, y0);
}

}  // namespace stqm
