#include "stqm/geometry.hpp"

#include <cmath>

#include "stqm/errors.hpp"
#include "stqm/spectral.hpp"

namespace stqm {
namespace {

int positive_mod(long long a, int n) {
  const long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// Rotation about node (ic, jc): out(ic+u, jc+v) = f(c + J^-t (u, v)).
ComplexField permute_about_node(const ComplexField& f, int ic, int jc, int turns) {
  const Grid2D& g = f.grid();
  const int n = g.nx();
  std::vector<Complex> out(g.size());
  for (int j = 0; j < n; ++j) {
    const int v = j - jc;
    for (int i = 0; i < n; ++i) {
      const int u = i - ic;
      int su = u, sv = v;
      switch (turns) {
        case 1: su = v; sv = -u; break;
        case 2: su = -u; sv = -v; break;
        case 3: su = -v; sv = u; break;
        default: break;
      }
      out[g.index(i, j)] = f(positive_mod(ic + su, n), positive_mod(jc + sv, n));
    }
  }
  return ComplexField(g, std::move(out));
}

}  // namespace

Point rotate_point(Point p, Point pivot, int quarter_turns) {
  double u = p.x - pivot.x;
  double v = p.y - pivot.y;
  const int turns = positive_mod(quarter_turns, 4);
  for (int t = 0; t < turns; ++t) {
    const double nu = -v;
    v = u;
    u = nu;
  }
  return {pivot.x + u, pivot.y + v};
}

ComplexField rotate_quarter_turns_unguarded(const ComplexField& f, Point pivot, int quarter_turns) {
  const Grid2D& g = f.grid();
  if (!g.is_square()) throw ConfigError("field rotation requires a square grid with equal spacing");
  if (!g.contains(pivot)) throw ConfigError("rotation pivot lies outside the grid");
  const int turns = positive_mod(quarter_turns, 4);
  if (turns == 0) return f;

  const int ic = static_cast<int>(std::lround((pivot.x - g.x0()) / g.dx()));
  const int jc = static_cast<int>(std::lround((pivot.y - g.y0()) / g.dy()));
  const Point node{g.x(ic), g.y(jc)};
  // R_p = T_d R_c T_{-d} with d = pivot - node.
  const Point d{pivot.x - node.x, pivot.y - node.y};
  const bool on_node = std::abs(d.x) < 1e-12 * g.dx() && std::abs(d.y) < 1e-12 * g.dy();

  return on_node ? permute_about_node(f, ic, jc, turns)
                             : spectral_translate(permute_about_node(spectral_translate(f, {-d.x, -d.y}), ic, jc,
                                                                     turns),
                                                  d);
}

ComplexField rotate_quarter_turns(const ComplexField& f, Point pivot, int quarter_turns) {
  ComplexField out = rotate_quarter_turns_unguarded(f, pivot, quarter_turns);
  check_boundary_mass(out, "rotate_field_90");
  return out;
}

}  // namespace stqm
