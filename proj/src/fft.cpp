#include "stqm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <tuple>
#include <mutex>
#include <numbers>
#include <utility>

namespace stqm {
namespace {

// Planning is not thread-safe in FFTW; execution of an existing plan on new
// arrays is. Plans are created once per (shape, direction) and never freed.
class PlanCache {
 public:
  fftw_plan get(int nx, int ny, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(nx, ny, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<Complex> scratch_in(static_cast<std::size_t>(nx) * ny);
    std::vector<Complex> scratch_out(scratch_in.size());
    // Row-major [ny][nx] with x fastest matches Grid2D::index.
    fftw_plan p = fftw_plan_dft_2d(ny, nx, reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                   reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

std::vector<Complex> forward_fft(const ComplexField& f) {
  const Grid2D& g = f.grid();
  std::vector<Complex> in(f.values().begin(), f.values().end());
  std::vector<Complex> out(in.size());
  fftw_execute_dft(plan_cache().get(g.nx(), g.ny(), FFTW_FORWARD), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

ComplexField inverse_fft(const Grid2D& grid, std::vector<Complex> spectrum) {
  std::vector<Complex> out(spectrum.size());
  fftw_execute_dft(plan_cache().get(grid.nx(), grid.ny(), FFTW_BACKWARD),
                   reinterpret_cast<fftw_complex*>(spectrum.data()), reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(out.size());
  for (Complex& z : out) z *= scale;
  return ComplexField(grid, std::move(out));
}

std::vector<double> wavenumbers(int n, double d) {
  std::vector<double> k(static_cast<std::size_t>(n));
  const double base = 2.0 * std::numbers::pi / (n * d);
  for (int m = 0; m < n; ++m) k[static_cast<std::size_t>(m)] = base * (m < (n + 1) / 2 ? m : m - n);
  return k;
}

}  // namespace stqm
