#include "stqm/amplitudes.hpp"

#include <cmath>

#include "stqm/spectral.hpp"

namespace stqm {

DensityPair ct_density_current(const ComplexField& psi) {
  auto [gx, gy] = spectral_gradient(psi);
  std::vector<Complex> rho(psi.size()), jx(psi.size()), jy(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const Complex c = std::conj(psi[k]);
    rho[k] = std::norm(psi[k]);
    jx[k] = (c * gx[k]).imag();
    jy[k] = (c * gy[k]).imag();
  }
  const Grid2D& g = psi.grid();
  return {ComplexField(g, std::move(rho)), ComplexField(g, std::move(jx)), ComplexField(g, std::move(jy))};
}

DensityPair st_density_current(const ComplexField& phi_star, const ComplexField& psi) {
  require_same_grid(phi_star, psi, "st_density_current");
  auto [psx, psy] = spectral_gradient(psi);
  auto [fsx, fsy] = spectral_gradient(phi_star);
  const Complex inv_2i(0.0, -0.5);
  std::vector<Complex> rho(psi.size()), jx(psi.size()), jy(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) {
    rho[k] = phi_star[k] * psi[k];
    jx[k] = inv_2i * (phi_star[k] * psx[k] - psi[k] * fsx[k]);
    jy[k] = inv_2i * (phi_star[k] * psy[k] - psi[k] * fsy[k]);
  }
  const Grid2D& g = psi.grid();
  return {ComplexField(g, std::move(rho)), ComplexField(g, std::move(jx)), ComplexField(g, std::move(jy))};
}

double local_conservation_residual(const DensityPair& minus, const DensityPair& center, const DensityPair& plus,
                                   double dt) {
  require_same_grid(minus.rho, plus.rho, "local_conservation_residual");
  require_same_grid(center.rho, plus.rho, "local_conservation_residual");
  const ComplexField div = spectral_divergence(center.current_x, center.current_y);
  double sum = 0.0;
  const double inv = 1.0 / (2.0 * dt);
  for (std::size_t k = 0; k < div.size(); ++k) sum += std::norm((plus.rho[k] - minus.rho[k]) * inv + div[k]);
  return std::sqrt(sum * div.grid().cell_area());
}

Complex global_amplitude(const ComplexField& phi_star, const ComplexField& psi) {
  return inner_product(conj(phi_star), psi);
}

Complex transition_amplitude_ct(const ComplexField& psi_final, const ComplexField& xi) {
  return inner_product(xi, psi_final);
}

std::pair<double, double> nonfactorization_check(const ComplexField& phi_star, const ComplexField& psi) {
  require_same_grid(phi_star, psi, "nonfactorization_check");
  Complex total{};
  double squared = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const Complex r = phi_star[k] * psi[k];
    total += r;
    squared += std::norm(r);
  }
  const double area = psi.grid().cell_area();
  return {std::norm(total * area), squared * area};
}

}  // namespace stqm
