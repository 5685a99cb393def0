#include "stqm/optics.hpp"

#include <cmath>

#include "stqm/errors.hpp"
#include "stqm/spectral.hpp"
#include "stqm/fft.hpp"
#include "stqm/geometry.hpp"
#include "stqm/oracle.hpp"

namespace stqm {
namespace {

struct PortModes {
  ComplexField a;
  ComplexField b;
  ComplexField rest;
  double unported_fraction;
};

PortModes split_ports(const ComplexField& f, const SplitterSpec& s) {
  const Grid2D& g = f.grid();
  const std::vector<Complex> spec = forward_fft(f);
  const auto kx = wavenumbers(g.nx(), g.dx());
  const auto ky = wavenumbers(g.ny(), g.dy());
  std::vector<Complex> sa(spec.size()), sb(spec.size());
  double total = 0.0, unported = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(i, j);
      const double m = std::norm(spec[k]);
      total += m;
      if (in_momentum_cone(kx[i], ky[j], s.in_axis, s.cone_half_angle)) {
        sa[k] = spec[k];
      } else if (in_momentum_cone(kx[i], ky[j], s.out_axis, s.cone_half_angle)) {
        sb[k] = spec[k];
      } else {
        unported += m;
      }
    }
  }
  ComplexField a = inverse_fft(g, std::move(sa));
  ComplexField b = inverse_fft(g, std::move(sb));
  ComplexField rest = f - a - b;
  return {std::move(a), std::move(b), std::move(rest), total > 0.0 ? unported / total : 0.0};
}

ComplexField apply_ports(const ComplexField& f, const SplitterSpec& s, const std::array<Complex, 4>& m) {
  PortModes p = split_ports(f, s);
  if (p.unported_fraction > kUnportedMassLimit) {
    throw GeometryError("splitter input has " + std::to_string(p.unported_fraction) +
                            " of its mass outside both port cones",
                        s.event_time);
  }
  const ComplexField ra = rotate_quarter_turns_unguarded(p.a, s.position, 1);
  const ComplexField rb = rotate_quarter_turns_unguarded(p.b, s.position, -1);
  ComplexField out = m[0] * p.a + m[1] * rb + m[2] * ra + m[3] * p.b + p.rest;
  check_boundary_mass(out, "beam splitter", s.event_time);
  return out;
}

}  // namespace

std::string to_string(SplitterConvention c) {
  return c == SplitterConvention::RealHadamard ? "real-hadamard" : "symmetric-i";
}

SplitterConvention splitter_convention_from_string(const std::string& s) {
  if (s == "real-hadamard") return SplitterConvention::RealHadamard;
  if (s == "symmetric-i") return SplitterConvention::SymmetricI;
  throw ConfigError("unknown splitter convention '" + s + "' (expected real-hadamard or symmetric-i)");
}

std::array<Complex, 4> splitter_matrix(SplitterConvention c) {
  const double r = 1.0 / std::sqrt(2.0);
  if (c == SplitterConvention::RealHadamard) return {Complex(r), Complex(r), Complex(r), Complex(-r)};
  return {Complex(r), Complex(0.0, r), Complex(0.0, r), Complex(r)};
}

ComplexField apply_splitter_forward(const ComplexField& psi, const SplitterSpec& s) {
  return apply_ports(psi, s, splitter_matrix(s.convention));
}

ComplexField apply_splitter_backward(const ComplexField& phi_star, const SplitterSpec& s) {
  const auto m = splitter_matrix(s.convention);
  const std::array<Complex, 4> adjoint{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
  return conj(apply_ports(conj(phi_star), s, adjoint));
}

ComplexField detector_final_field(const Grid2D& grid, const DetectorSpec& d) {
  if (d.age == 0.0) return gaussian_packet(grid, d.final_packet);
  ComplexField xi = oracle_field(grid, d.final_packet, d.age);
  return Complex(1.0 / norm(xi)) * xi;
}

ComplexField collapse_project(const ComplexField& psi, const DetectorSpec& d) {
  return detector_final_field(psi.grid(), d);
}

}  // namespace stqm
