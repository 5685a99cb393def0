#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stqm/experiment.hpp"
#include "stqm/oracle.hpp"
#include "stqm/propagator.hpp"
#include "stqm/spectral.hpp"

namespace stqm {

using nlohmann::json;

namespace {

CheckResult below(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured, threshold, "<", measured < threshold, std::move(detail)};
}

CheckResult at_least(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured, threshold, ">=", measured >= threshold, std::move(detail)};
}

// |measured - target| within tolerance; `threshold` records the tolerance.
CheckResult within(std::string name, double measured, double target, double tolerance, std::string detail) {
  return {std::move(name), measured, tolerance, "within", std::abs(measured - target) <= tolerance,
          std::move(detail)};
}

EvolutionSpec free_span(const ExperimentConfig& c, double t) {
  EvolutionSpec e;
  e.t_end = t;
  e.dt = c.dt;
  e.guard_interval = c.guard_interval;
  return e;
}

double oracle_error(const ExperimentConfig& c, const ComplexField& psi0, double t) {
  const ComplexField numeric = evolve_retarded(psi0, free_span(c, t));
  return l2_distance(numeric, oracle_field(c.grid, c.source, t));
}

double order_ratio(const ComplexField& psi, const ComplexField* phi_star, double dt) {
  const double coarse = residual_at(psi, phi_star, dt);
  const double fine = residual_at(psi, phi_star, 0.5 * dt);
  return fine > 0.0 ? coarse / fine : 0.0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport verify(const ExperimentConfig& config) {
  validate_config(config);
  VerifyReport out;
  auto& checks = out.checks;
  const ExperimentConfig& c = config;
  const ComplexField psi0 = gaussian_packet(c.grid, c.source);

  const double probe = std::min(500.0, c.t_final);
  if (probe != c.t_final) checks.push_back(below("oracle_l2_t" + fmt(probe), oracle_error(c, psi0, probe), 1e-8));
  checks.push_back(below("oracle_l2_t" + fmt(c.t_final), oracle_error(c, psi0, c.t_final), 1e-8));

  const WaveHistory h1 = simulate_waves(c, Branch::D1, true);

  double step_drift = 0.0;
  double ct_norm_dev = 0.0;
  for (const ComplexField& psi : h1.psi) {
    const double n = norm_squared(psi);
    step_drift = std::max(step_drift, std::abs(norm_squared(propagate(psi, c.dt)) - n));
    ct_norm_dev = std::max(ct_norm_dev, std::abs(n - 1.0));
  }
  checks.push_back(below("unitarity_step_norm_drift", step_drift, 1e-12));
  checks.push_back(below("ct_norm_deviation", ct_norm_dev, 1e-9));

  if (c.splitter.enabled) {
    const auto after = std::find_if(h1.times.begin(), h1.times.end(), [&](const SnapshotTime& t) {
      return t.t > c.splitter.event_time ||
             (t.t == c.splitter.event_time && t.side == SnapshotTime::Side::After);
    });
    const ComplexField& psi = h1.psi[static_cast<std::size_t>(after - h1.times.begin())];
    const double h = c.splitter.cone_half_angle;
    checks.push_back(within("port_balance_in", momentum_cone_fraction(psi, c.splitter.in_axis, h), 0.5, 1e-4,
                            "target 0.5 at " + after->label()));
    checks.push_back(within("port_balance_out", momentum_cone_fraction(psi, c.splitter.out_axis, h), 0.5, 1e-4,
                            "target 0.5 at " + after->label()));
  }

  const std::size_t k0 = h1.index_of({0.0, SnapshotTime::Side::At});
  const std::size_t kf = h1.index_of({c.t_final, SnapshotTime::Side::At});
  double dev = 0.0, dev_re = 0.0, dev_im = 0.0;
  const Complex a0 = global_amplitude(h1.phi_star[k0], h1.psi[k0]);
  const double scale = std::abs(a0) > 0.0 ? std::abs(a0) : 1.0;
  for (std::size_t k = 0; k < h1.times.size(); ++k) {
    const Complex a = global_amplitude(h1.phi_star[k], h1.psi[k]);
    dev = std::max(dev, std::abs(a - a0) / scale);
    dev_re = std::max(dev_re, std::abs(a.real() - a0.real()) / scale);
    dev_im = std::max(dev_im, std::abs(a.imag() - a0.imag()) / scale);
  }
  checks.push_back(below("A_s_invariance", dev, 1e-6));
  checks.push_back(below("re_volume_invariance", dev_re, 1e-6));
  checks.push_back(below("im_volume_invariance", dev_im, 1e-6));

  const Complex a_ct = transition_amplitude_ct(h1.psi[kf], detector_final_field(c.grid, c.detector(Branch::D1)));
  checks.push_back(below("ct_st_equivalence", std::abs(a_ct - a0), 1e-6));

  // Order checks run at the first snapshot whose +/-dt window is free of the event.
  std::size_t kr = k0;
  for (std::size_t k = 0; k < h1.times.size(); ++k) {
    const double t = h1.times[k].t;
    const double e = c.splitter.event_time;
    const bool clear = !c.splitter.enabled || t + c.dt < e || t - c.dt > e;
    if (t > 0.0 && clear) {
      kr = k;
      break;
    }
  }
  const std::string at = "dt vs dt/2 at t=" + h1.times[kr].label();
  checks.push_back(at_least("ct_conservation_order", order_ratio(h1.psi[kr], nullptr, c.dt), 3.9, at));
  checks.push_back(at_least("st_conservation_order", order_ratio(h1.psi[kr], &h1.phi_star[kr], c.dt), 3.9, at));

  // Without a splitter the two detectors are unrelated, so there is no symmetry to check.
  if (!c.splitter.enabled) return out;
  const WaveHistory h2 = simulate_waves(c, Branch::D2, true);
  const Complex b0 = global_amplitude(h2.phi_star[k0], h2.psi[k0]);
  checks.push_back(below("branch_symmetry_abs_A_s", std::abs(std::abs(a0) - std::abs(b0)), 1e-3));
  checks.push_back(below("branch_symmetry_P_s", std::abs(std::norm(a0) - std::norm(b0)), 1e-3));
  double width_gap = 0.0;
  for (std::size_t k = 0; k < h1.times.size(); ++k) {
    const ComplexField r1 = multiply(h1.phi_star[k], h1.psi[k]);
    const ComplexField r2 = multiply(h2.phi_star[k], h2.psi[k]);
    const double w1 = width_along_axis(r1, observable_frame(c, Branch::D1, h1.times[k]));
    const double w2 = width_along_axis(r2, observable_frame(c, Branch::D2, h2.times[k]));
    width_gap = std::max(width_gap, std::abs(w1 - w2) / std::max(w1, w2));
  }
  checks.push_back(below("branch_symmetry_width_series", width_gap, 1e-3, "max relative gap"));
  return out;
}

json verify_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", c.measured},
                      {"threshold", c.threshold},
                      {"comparison", c.comparison},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

}  // namespace stqm
