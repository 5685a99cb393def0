#pragma once

#include <optional>

#include "stqm/field.hpp"
#include "stqm/optics.hpp"

namespace stqm {

/// Points with (r - origin) . normal >= 0.
/// Unit vector at `angle` with components below 1e-15 flushed to zero, so the
/// lattice axes and diagonals come out exact.
Point axis_direction(double angle);

struct HalfPlane {
  Point origin;
  Point normal;

  bool contains(double x, double y) const {
    return (x - origin.x) * normal.x + (y - origin.y) * normal.y >= 0.0;
  }
};

/// Where and along which direction shape statistics are taken.
struct ObservableFrame {
  double axis = 0.0;
  std::optional<HalfPlane> region;
};

/// Standard deviation of the normalized |density| distribution projected on the axis.
double width_along_axis(const ComplexField& density, const ObservableFrame& frame);

/// Third standardized moment of that same projected distribution.
double skewness_along_axis(const ComplexField& density, const ObservableFrame& frame);

/// Integral of |density| over the rectangle.
double corridor_mass(const ComplexField& density, const Rect& corridor);

/// Number of 4-connected components of {|density| > threshold * max |density|}.
int modality(const ComplexField& density, double threshold);

struct SnapshotObservables {
  double width = 0.0;
  double skewness = 0.0;
  double corridor_mass_d1 = 0.0;
  double corridor_mass_d2 = 0.0;
  int modality = 0;

  /// d1 / d2 corridor mass; +inf when the d2 corridor is empty.
  double corridor_ratio() const;
};

SnapshotObservables compute_observables(const ComplexField& density, const ObservableFrame& frame,
                                        const Rect& corridor_d1, const Rect& corridor_d2, double modality_threshold);

}  // namespace stqm
