#include "stqm/propagator.hpp"

#include <cmath>
#include <string>

#include "stqm/errors.hpp"
#include "stqm/spectral.hpp"

namespace stqm {
namespace {

constexpr double kStepTolerance = 1e-9;

long long whole_steps(double span, double dt, const char* what) {
  const double steps = span / dt;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > kStepTolerance * std::max(1.0, std::abs(steps))) {
    throw ConfigError(std::string(what) + ": interval " + std::to_string(span) + " is not a multiple of dt=" +
                      std::to_string(dt));
  }
  return static_cast<long long>(rounded);
}

ComplexField kinetic_step(const ComplexField& f, double tau) {
  return apply_spectral_multiplier(f, [tau](double kx, double ky) {
    return std::polar(1.0, -0.5 * (kx * kx + ky * ky) * tau);
  });
}

ComplexField potential_step(const ComplexField& f, const std::vector<double>& v, double tau) {
  std::vector<Complex> out(f.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::polar(1.0, -v[k] * tau) * f[k];
  return ComplexField(f.grid(), std::move(out));
}

// Applies exp(-i H |t_end - t_start|) in guard-sized chunks, checking the
// boundary mass after each. Times in errors follow the physical clock.
ComplexField evolve_guarded(const ComplexField& f0, const EvolutionSpec& spec) {
  if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) throw ConfigError("evolution dt must be positive");
  if (spec.potential && spec.potential->size() != f0.size()) {
    throw ConfigError("potential size does not match the field grid");
  }
  const double span = std::abs(spec.t_end - spec.t_start);
  const long long steps = whole_steps(span, spec.dt, "evolution");
  long long guard_steps = static_cast<long long>(std::llround(spec.guard_interval / spec.dt));
  if (guard_steps < 1) guard_steps = 1;

  ComplexField f = f0;
  long long done = 0;
  while (done < steps) {
    const long long chunk = std::min(guard_steps, steps - done);
    if (spec.potential) {
      for (long long s = 0; s < chunk; ++s) f = propagate(f, spec.dt, spec.dt, spec.potential);
    } else {
      f = kinetic_step(f, static_cast<double>(chunk) * spec.dt);
    }
    done += chunk;
    const double clock = spec.t_end >= spec.t_start ? 1.0 : -1.0;
    const double t = spec.t_start + clock * static_cast<double>(done) * spec.dt;
    check_boundary_mass(f, "evolution", t);
  }
  return f;
}

}  // namespace

ComplexField propagate(const ComplexField& f, double duration, double dt,
                       const std::optional<std::vector<double>>& potential) {
  if (!potential) return kinetic_step(f, duration);
  if (potential->size() != f.size()) throw ConfigError("potential size does not match the field grid");
  const long long steps = whole_steps(std::abs(duration), dt, "propagate");
  const double tau = duration < 0 ? -dt : dt;
  ComplexField out = f;
  for (long long s = 0; s < steps; ++s) {
    out = potential_step(out, *potential, 0.5 * tau);
    out = kinetic_step(out, tau);
    out = potential_step(out, *potential, 0.5 * tau);
  }
  return out;
}

ComplexField evolve_retarded(const ComplexField& psi, const EvolutionSpec& spec) {
  if (spec.t_end < spec.t_start) throw ConfigError("evolve_retarded requires t_end >= t_start");
  return evolve_guarded(psi, spec);
}

ComplexField evolve_advanced(const ComplexField& phi_star, const EvolutionSpec& spec) {
  if (spec.t_end > spec.t_start) throw ConfigError("evolve_advanced requires t_end <= t_start");
  // Backward in time by s under the ASE is exp(-i H s): same sign as forward RSE.
  return evolve_guarded(phi_star, spec);
}

}  // namespace stqm
