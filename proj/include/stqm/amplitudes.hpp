#pragma once

#include <utility>

#include "stqm/field.hpp"

namespace stqm {

/// A density and its matching current. CT: rho = |psi|^2 with j = Im(psi* grad psi).
/// ST: rho_s = phi* psi with j_s = (phi* grad psi - psi grad phi*) / 2i.
struct DensityPair {
  ComplexField rho;
  ComplexField current_x;
  ComplexField current_y;
};

DensityPair ct_density_current(const ComplexField& psi);
DensityPair st_density_current(const ComplexField& phi_star, const ComplexField& psi);

/// L2 norm of (rho(t+dt) - rho(t-dt)) / (2 dt) + div j(t), divergence taken
/// spectrally. Real and imaginary parts both count for complex densities.
double local_conservation_residual(const DensityPair& minus, const DensityPair& center, const DensityPair& plus,
                                   double dt);

/// A_s = sum phi* psi dx dy, with phi_star the stored (already conjugated) field.
Complex global_amplitude(const ComplexField& phi_star, const ComplexField& psi);

/// A = <xi, psi_final>.
Complex transition_amplitude_ct(const ComplexField& psi_final, const ComplexField& xi);

/// (|integral rho_s|^2, integral |rho_s|^2): the two sides of the non-factorization inequality.
std::pair<double, double> nonfactorization_check(const ComplexField& phi_star, const ComplexField& psi);

}  // namespace stqm
