#pragma once

#include "stqm/field.hpp"

namespace stqm {

/// Rotates f by quarter_turns * 90 degrees counter-clockwise about pivot, so a
/// +x-moving packet becomes +y-moving for quarter_turns = 1.
///
/// The rotation is realized as a spectral shift that puts the pivot on its
/// nearest node, an exact node permutation on the periodic lattice, and the
/// inverse shift. It is unitary and four turns return f to rounding. Requires a
/// square grid (nx == ny, dx == dy); throws ConfigError otherwise, and
/// GeometryError when the result carries more than 1e-10 of its mass within
/// four nodes of the boundary.
ComplexField rotate_quarter_turns(const ComplexField& f, Point pivot, int quarter_turns);

/// Same rotation without the boundary-mass guard, for pieces of a field whose
/// own mass is negligible (the guard is relative to the piece's total).
ComplexField rotate_quarter_turns_unguarded(const ComplexField& f, Point pivot, int quarter_turns);

inline ComplexField rotate_field_90(const ComplexField& f, Point pivot) { return rotate_quarter_turns(f, pivot, 1); }

/// Counter-clockwise rotation of a point about a pivot.
Point rotate_point(Point p, Point pivot, int quarter_turns);

}  // namespace stqm
