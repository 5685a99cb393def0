#pragma once

#include <optional>
#include <vector>

#include "stqm/field.hpp"

namespace stqm {

/// Interval and step for one evolution call. dt is unsigned; the direction of
/// time is set by which evolve_* function is called.
struct EvolutionSpec {
  double t_start = 0.0;
  double t_end = 0.0;
  double dt = 1.0;
  /// Real potential sampled on the field's grid; empty means free evolution.
  std::optional<std::vector<double>> potential;
  /// The boundary-mass guard is sampled every guard_interval time units
  /// (rounded to a whole number of dt) and at t_end.
  double guard_interval = 100.0;
};

/// Solves i dpsi/dt = -1/2 lap psi + V psi from t_start forward to t_end by
/// split-step spectral steps (Strang splitting when a potential is present;
/// one exact kinetic step per guard chunk when it is not). Throws GeometryError
/// naming the time if the boundary-mass guard trips, ConfigError on a bad spec.
ComplexField evolve_retarded(const ComplexField& psi, const EvolutionSpec& spec);

/// Solves -i dphi*/dt = -1/2 lap phi* + V phi* from t_start backward to t_end
/// (t_end <= t_start). Going back by s applies exp(-i H s), the same operator the
/// retarded equation applies going forward by s.
ComplexField evolve_advanced(const ComplexField& phi_star, const EvolutionSpec& spec);

/// Applies exp(-i H duration) for a signed duration; no guard sampling. This is
/// the primitive both evolve_* calls are built on.
ComplexField propagate(const ComplexField& f, double duration, double dt = 1.0,
                       const std::optional<std::vector<double>>& potential = std::nullopt);

}  // namespace stqm
