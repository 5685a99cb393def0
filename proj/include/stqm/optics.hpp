#pragma once

#include <array>
#include <numbers>
#include <string>

#include "stqm/field.hpp"
#include "stqm/gaussian.hpp"

namespace stqm {

enum class SplitterConvention { RealHadamard, SymmetricI };

std::string to_string(SplitterConvention c);
SplitterConvention splitter_convention_from_string(const std::string& s);

/// 2x2 port matrix acting on (mode a, mode b): [[1,1],[1,-1]]/sqrt2 or [[1,i],[i,1]]/sqrt2.
std::array<Complex, 4> splitter_matrix(SplitterConvention c);

/// Idealized 50/50 two-port splitter acting instantaneously at event_time.
/// Mode a is the momentum cone around in_axis, mode b the cone around out_axis;
/// the geometric rotation about `position` exchanges them.
struct SplitterSpec {
  Point position{400.0, 0.0};
  double event_time = 1000.0;
  double in_axis = 0.0;
  double out_axis = std::numbers::pi / 2.0;
  double cone_half_angle = std::numbers::pi / 4.0;
  SplitterConvention convention = SplitterConvention::RealHadamard;
  bool enabled = true;
};

/// Axis-aligned rectangle used for path-presence observables.
struct Rect {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;

  bool contains(double x, double y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
};

struct DetectorSpec {
  std::string name;
  /// Packet measured at t_final. With age > 0 the final condition is this
  /// packet's closed-form free evolution after `age` time units.
  GaussianSpec final_packet;
  double age = 0.0;
  Rect corridor;
};

/// Mass fraction the splitter has no port for (outside both cones); must stay below this.
inline constexpr double kUnportedMassLimit = 1e-6;

/// out = M00 a + M01 R^-1 b + M10 R a + M11 b + rest, with a, b the port cones of
/// psi and R the +90 degree rotation about the splitter. Throws GeometryError
/// when more than 1e-6 of the mass lies outside both port cones.
ComplexField apply_splitter_forward(const ComplexField& psi, const SplitterSpec& s);

/// Adjoint splitter for the advanced wave: conj(U^dagger conj(phi_star)). U^dagger
/// is evaluated by the forward code path with the conjugate-transposed port
/// matrix, so for the real Hadamard convention this is conj(U(conj(phi_star))).
ComplexField apply_splitter_backward(const ComplexField& phi_star, const SplitterSpec& s);

/// State replacement on measurement: the detector's normalized final packet.
ComplexField collapse_project(const ComplexField& psi, const DetectorSpec& d);

/// The detector's final condition xi on a grid, normalized to unit discrete norm.
ComplexField detector_final_field(const Grid2D& grid, const DetectorSpec& d);

}  // namespace stqm
