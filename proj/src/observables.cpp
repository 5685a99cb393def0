#include "stqm/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace stqm {
namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double third = 0.0;
};

Moments projected_moments(const ComplexField& density, const ObservableFrame& frame) {
  const Grid2D& g = density.grid();
  const Point u = axis_direction(frame.axis);
  const double ux = u.x;
  const double uy = u.y;
  const auto included = [&](int i, int j) { return !frame.region || frame.region->contains(g.x(i), g.y(j)); };

  double w = 0.0, s1 = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (!included(i, j)) continue;
      const double m = std::abs(density(i, j));
      w += m;
      s1 += m * (g.x(i) * ux + g.y(j) * uy);
    }
  }
  Moments out;
  if (w == 0.0) return out;
  out.mean = s1 / w;
  double s2 = 0.0, s3 = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (!included(i, j)) continue;
      const double m = std::abs(density(i, j));
      const double d = g.x(i) * ux + g.y(j) * uy - out.mean;
      s2 += m * d * d;
      s3 += m * d * d * d;
    }
  }
  out.variance = s2 / w;
  out.third = s3 / w;
  return out;
}

}  // namespace

Point axis_direction(double angle) {
  const auto flush = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  return {flush(std::cos(angle)), flush(std::sin(angle))};
}

double width_along_axis(const ComplexField& density, const ObservableFrame& frame) {
  return std::sqrt(projected_moments(density, frame).variance);
}

double skewness_along_axis(const ComplexField& density, const ObservableFrame& frame) {
  const Moments m = projected_moments(density, frame);
  if (m.variance == 0.0) return 0.0;
  return m.third / std::pow(m.variance, 1.5);
}

double corridor_mass(const ComplexField& density, const Rect& corridor) {
  const Grid2D& g = density.grid();
  double sum = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const double y = g.y(j);
    if (y < corridor.ymin || y > corridor.ymax) continue;
    for (int i = 0; i < g.nx(); ++i) {
      if (corridor.contains(g.x(i), y)) sum += std::abs(density(i, j));
    }
  }
  return sum * g.cell_area();
}

int modality(const ComplexField& density, double threshold) {
  const Grid2D& g = density.grid();
  double peak = 0.0;
  for (Complex z : density.values()) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return 0;
  const double cut = threshold * peak;
  std::vector<char> mask(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) mask[k] = std::abs(density[k]) > cut;

  int components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < g.size(); ++seed) {
    if (!mask[seed]) continue;
    ++components;
    mask[seed] = 0;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      const int i = static_cast<int>(k % g.nx());
      const int j = static_cast<int>(k / g.nx());
      const int ni[4] = {i - 1, i + 1, i, i};
      const int nj[4] = {j, j, j - 1, j + 1};
      for (int n = 0; n < 4; ++n) {
        if (ni[n] < 0 || ni[n] >= g.nx() || nj[n] < 0 || nj[n] >= g.ny()) continue;
        const std::size_t q = g.index(ni[n], nj[n]);
        if (mask[q]) {
          mask[q] = 0;
          stack.push_back(q);
        }
      }
    }
  }
  return components;
}

double SnapshotObservables::corridor_ratio() const {
  if (corridor_mass_d2 == 0.0) return std::numeric_limits<double>::infinity();
  return corridor_mass_d1 / corridor_mass_d2;
}

SnapshotObservables compute_observables(const ComplexField& density, const ObservableFrame& frame,
                                        const Rect& corridor_d1, const Rect& corridor_d2, double modality_threshold) {
  SnapshotObservables o;
  const Moments m = projected_moments(density, frame);
  o.width = std::sqrt(m.variance);
  o.skewness = m.variance == 0.0 ? 0.0 : m.third / std::pow(m.variance, 1.5);
  o.corridor_mass_d1 = corridor_mass(density, corridor_d1);
  o.corridor_mass_d2 = corridor_mass(density, corridor_d2);
  o.modality = modality(density, modality_threshold);
  return o;
}

}  // namespace stqm
