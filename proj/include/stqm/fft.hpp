#pragma once

#include <vector>

#include "stqm/field.hpp"

namespace stqm {

/// Unnormalized forward 2D DFT of the field values (FFTW sign convention, exp(-i k x)).
std::vector<Complex> forward_fft(const ComplexField& f);

/// Inverse 2D DFT including the 1/(nx*ny) factor, so inverse(forward(f)) == f.
ComplexField inverse_fft(const Grid2D& grid, std::vector<Complex> spectrum);

/// Angular wavenumbers in FFT order for n nodes of spacing d: index m < n/2 maps to
/// 2*pi*m/(n*d), the rest to 2*pi*(m-n)/(n*d). The Nyquist mode is negative.
std::vector<double> wavenumbers(int n, double d);

}  // namespace stqm
