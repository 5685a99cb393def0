#include "stqm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stqm/errors.hpp"
#include "stqm/geometry.hpp"
#include "stqm/oracle.hpp"
#include "stqm/propagator.hpp"

namespace stqm {

using nlohmann::json;

namespace {

std::vector<SnapshotTime> sampling_times(const ExperimentConfig& c) {
  std::vector<SnapshotTime> times = c.snapshot_times;
  const auto add = [&](double t) {
    const bool present = std::any_of(times.begin(), times.end(), [t](const SnapshotTime& s) { return s.t == t; });
    if (!present) times.push_back({t, SnapshotTime::Side::At});
  };
  add(0.0);
  add(c.t_final);
  std::sort(times.begin(), times.end(), snapshot_before);
  return times;
}

bool after_event(const SplitterSpec& s, const SnapshotTime& t) {
  return t.t > s.event_time || (t.t == s.event_time && t.side == SnapshotTime::Side::After);
}

EvolutionSpec span(const ExperimentConfig& c, double from, double to) {
  EvolutionSpec e;
  e.t_start = from;
  e.t_end = to;
  e.dt = c.dt;
  e.guard_interval = c.guard_interval;
  return e;
}

// The instant the report's nonfactorization check uses: first snapshot strictly
// between the source and the splitter, else the first snapshot after t = 0.
std::optional<SnapshotTime> midflight_time(const ExperimentConfig& c, const std::vector<SnapshotTime>& times) {
  const double limit = c.splitter.enabled ? c.splitter.event_time : c.t_final;
  for (const auto& t : times) {
    if (t.t > 0.0 && t.t < limit) return t;
  }
  for (const auto& t : times) {
    if (t.t > 0.0) return t;
  }
  return std::nullopt;
}

bool residual_window_clear(const ExperimentConfig& c, const SnapshotTime& t) {
  if (!c.splitter.enabled) return true;
  const double e = c.splitter.event_time;
  return !(t.t - c.dt < e && e < t.t + c.dt) && t.t != e;
}

}  // namespace

std::size_t WaveHistory::index_of(const SnapshotTime& t) const {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] == t) return k;
  }
  throw std::out_of_range("no wave state at t=" + t.label());
}

WaveHistory simulate_waves(const ExperimentConfig& c, Branch branch, bool with_advanced) {
  WaveHistory h;
  h.times = sampling_times(c);
  const SplitterSpec& s = c.splitter;

  ComplexField psi = gaussian_packet(c.grid, c.source);
  double t = 0.0;
  bool split = false;
  for (const SnapshotTime& st : h.times) {
    if (s.enabled && !split && after_event(s, st)) {
      psi = evolve_retarded(psi, span(c, t, s.event_time));
      t = s.event_time;
      psi = apply_splitter_forward(psi, s);
      split = true;
    }
    psi = evolve_retarded(psi, span(c, t, st.t));
    t = st.t;
    h.psi.push_back(psi);
  }

  if (!with_advanced) return h;
  h.phi_star.resize(h.times.size(), ComplexField(c.grid));
  ComplexField phi = conj(detector_final_field(c.grid, c.detector(branch)));
  t = c.t_final;
  split = false;
  for (std::size_t k = h.times.size(); k-- > 0;) {
    const SnapshotTime& st = h.times[k];
    if (s.enabled && !split && !after_event(s, st)) {
      phi = evolve_advanced(phi, span(c, t, s.event_time));
      t = s.event_time;
      phi = apply_splitter_backward(phi, s);
      split = true;
    }
    phi = evolve_advanced(phi, span(c, t, st.t));
    t = st.t;
    h.phi_star[k] = phi;
  }
  return h;
}

double residual_at(const ComplexField& psi, const ComplexField* phi_star, double dt) {
  const ComplexField psi_plus = propagate(psi, dt);
  const ComplexField psi_minus = propagate(psi, -dt);
  if (!phi_star) {
    return local_conservation_residual(ct_density_current(psi_minus), ct_density_current(psi),
                                       ct_density_current(psi_plus), dt);
  }
  // phi*(t - s) = exp(-i H s) phi*(t).
  const ComplexField phi_plus = propagate(*phi_star, -dt);
  const ComplexField phi_minus = propagate(*phi_star, dt);
  return local_conservation_residual(st_density_current(phi_minus, psi_minus), st_density_current(*phi_star, psi),
                                     st_density_current(phi_plus, psi_plus), dt);
}

ObservableFrame observable_frame(const ExperimentConfig& c, Branch branch, const SnapshotTime& t) {
  const SplitterSpec& s = c.splitter;
  if (!s.enabled || !after_event(s, t)) return {s.in_axis, std::nullopt};
  const Point u_in = axis_direction(s.in_axis);
  const Point u_out = axis_direction(s.out_axis);
  if (branch == Branch::D1) return {s.in_axis, HalfPlane{s.position, {u_in.x - u_out.x, u_in.y - u_out.y}}};
  return {s.out_axis, HalfPlane{s.position, {u_out.x - u_in.x, u_out.y - u_in.y}}};
}

std::vector<double> TheorySeries::widths() const {
  std::vector<double> w;
  for (const auto& o : observables) w.push_back(o.width);
  return w;
}

std::vector<double> TheorySeries::skewness() const {
  std::vector<double> w;
  for (const auto& o : observables) w.push_back(o.skewness);
  return w;
}

std::string Snapshot::label() const {
  std::string l = to_string(theory) + "_t" + time.label();
  if (collapsed) l += "_collapsed";
  return l;
}

RunArtifacts run_experiment(const ExperimentConfig& c) {
  validate_config(c);
  const bool want_ct = c.mode != Theory::ST;
  const bool want_st = c.mode != Theory::CT;
  const WaveHistory h = simulate_waves(c, c.branch, want_st);
  const Rect& cor1 = c.detectors[0].corridor;
  const Rect& cor2 = c.detectors[1].corridor;

  RunArtifacts out;
  RunReport& r = out.report;
  r.branch = to_string(c.branch);

  const ComplexField& psi_final = h.psi[h.index_of({c.t_final, SnapshotTime::Side::At})];
  for (int k = 0; k < 2; ++k) {
    r.A_detectors[k] = transition_amplitude_ct(psi_final, detector_final_field(c.grid, c.detectors[k]));
    r.P_detectors[k] = std::norm(r.A_detectors[k]);
  }
  const int sel = c.branch == Branch::D1 ? 0 : 1;
  r.A = r.A_detectors[sel];
  r.P = r.P_detectors[sel];

  const auto requested = [&](const SnapshotTime& t) {
    return std::find(c.snapshot_times.begin(), c.snapshot_times.end(), t) != c.snapshot_times.end();
  };

  if (want_ct) {
    TheorySeries series;
    for (std::size_t k = 0; k < h.times.size(); ++k) {
      if (!requested(h.times[k])) continue;
      const ComplexField& psi = h.psi[k];
      ComplexField rho = multiply(conj(psi), psi);
      series.times.push_back(h.times[k]);
      series.integrals.push_back(integrate(rho));
      series.residuals.push_back(residual_window_clear(c, h.times[k]) ? std::optional(residual_at(psi, nullptr, c.dt))
                                                                        : std::nullopt);
      series.observables.push_back(compute_observables(rho, observable_frame(c, c.branch, h.times[k]), cor1, cor2,
                                                       c.modality_threshold));
      out.snapshots.push_back({h.times[k], Theory::CT, std::move(rho), series.integrals.back(), false});
    }
    const ComplexField xi = collapse_project(psi_final, c.selected_detector());
    ComplexField rho = multiply(conj(xi), xi);
    const Complex total = integrate(rho);
    out.snapshots.push_back({{c.t_final, SnapshotTime::Side::At}, Theory::CT, std::move(rho), total, true});
    r.ct = std::move(series);
  }

  if (want_st) {
    TheorySeries series;
    const std::size_t k0 = h.index_of({0.0, SnapshotTime::Side::At});
    const Complex a0 = global_amplitude(h.phi_star[k0], h.psi[k0]);
    double dev = 0.0, dev_re = 0.0, dev_im = 0.0;
    for (std::size_t k = 0; k < h.times.size(); ++k) {
      const Complex a = global_amplitude(h.phi_star[k], h.psi[k]);
      const double scale = std::abs(a0) > 0.0 ? std::abs(a0) : 1.0;
      dev = std::max(dev, std::abs(a - a0) / scale);
      dev_re = std::max(dev_re, std::abs(a.real() - a0.real()) / scale);
      dev_im = std::max(dev_im, std::abs(a.imag() - a0.imag()) / scale);
      if (!requested(h.times[k])) continue;
      ComplexField rho_s = multiply(h.phi_star[k], h.psi[k]);
      series.times.push_back(h.times[k]);
      series.integrals.push_back(a);
      series.residuals.push_back(residual_window_clear(c, h.times[k])
                                     ? std::optional(residual_at(h.psi[k], &h.phi_star[k], c.dt))
                                     : std::nullopt);
      series.observables.push_back(compute_observables(rho_s, observable_frame(c, c.branch, h.times[k]), cor1,
                                                       cor2, c.modality_threshold));
      out.snapshots.push_back({h.times[k], Theory::ST, std::move(rho_s), a, false});
    }
    r.A_s = a0;
    r.P_s = std::norm(a0);
    r.A_s_max_relative_deviation = dev;
    r.re_volume_max_relative_deviation = dev_re;
    r.im_volume_max_relative_deviation = dev_im;
    r.equivalence_gap = std::abs(r.A - a0);
    if (auto mid = midflight_time(c, h.times)) {
      const std::size_t k = h.index_of(*mid);
      r.nonfactorization = nonfactorization_check(h.phi_star[k], h.psi[k]);
      r.nonfactorization_time = *mid;
    }
    r.st = std::move(series);
  }

  out.provenance = {
      {"config", config_to_json(c)},
      {"config_hash", config_hash(c)},
      {"solver",
       {{"method", "split-step spectral (exact kinetic phase per guard chunk; Strang splitting with a potential)"},
        {"fft", "FFTW3, FFTW_ESTIMATE plans"},
        {"dt", c.dt},
        {"guard_interval", c.guard_interval},
        {"boundary_mass_limit", kBoundaryMassLimit},
        {"rotation", "spectral sub-node shift + exact lattice permutation"}}},
      {"version", STQM_VERSION},
  };
  return out;
}

std::pair<Complex, Complex> equivalence_check_st_ct(const ExperimentConfig& c) {
  validate_config(c);
  const WaveHistory h = simulate_waves(c, c.branch, true);
  const std::size_t kf = h.index_of({c.t_final, SnapshotTime::Side::At});
  const std::size_t k0 = h.index_of({0.0, SnapshotTime::Side::At});
  const Complex a = transition_amplitude_ct(h.psi[kf], detector_final_field(c.grid, c.selected_detector()));
  return {a, global_amplitude(h.phi_star[k0], h.psi[k0])};
}

namespace {

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json series_json(const TheorySeries& s, bool complex_integrals) {
  json entries = json::array();
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const SnapshotObservables& o = s.observables[k];
    json e = {
        {"label", s.times[k].label()},
        {"time", s.times[k].t},
        {"residual", s.residuals[k] ? json(*s.residuals[k]) : json(nullptr)},
        {"width", o.width},
        {"skewness", o.skewness},
        {"corridor_mass_d1", o.corridor_mass_d1},
        {"corridor_mass_d2", o.corridor_mass_d2},
        {"corridor_ratio", finite_or_null(o.corridor_ratio())},
        {"modality", o.modality},
    };
    if (complex_integrals) {
      e["A_s"] = complex_json(s.integrals[k]);
    } else {
      e["norm"] = s.integrals[k].real();
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

json report_to_json(const RunReport& r) {
  json j = {
      {"branch", r.branch},
      {"A", complex_json(r.A)},
      {"P", r.P},
      {"A_d1", complex_json(r.A_detectors[0])},
      {"P_d1", r.P_detectors[0]},
      {"A_d2", complex_json(r.A_detectors[1])},
      {"P_d2", r.P_detectors[1]},
  };
  if (r.ct) j["ct_series"] = series_json(*r.ct, false);
  if (r.st) {
    j["st_series"] = series_json(*r.st, true);
    j["A_s"] = complex_json(r.A_s);
    j["abs_A_s"] = std::abs(r.A_s);
    j["P_s"] = r.P_s;
    j["A_s_max_relative_deviation"] = r.A_s_max_relative_deviation;
    j["re_volume_max_relative_deviation"] = r.re_volume_max_relative_deviation;
    j["im_volume_max_relative_deviation"] = r.im_volume_max_relative_deviation;
    j["equivalence_gap"] = r.equivalence_gap;
    if (r.nonfactorization) {
      j["nonfactorization"] = {{"time", r.nonfactorization_time->label()},
                               {"abs_integral_squared", r.nonfactorization->first},
                               {"integral_abs_squared", r.nonfactorization->second}};
    }
  }
  return j;
}

json oracle_predictions(const ExperimentConfig& c) {
  validate_config(c);
  json times = json::array();
  for (const auto& t : c.snapshot_times) {
    const FreePacketState s = oracle_free_gaussian(c.source, t.t);
    times.push_back({{"label", t.label()},
                     {"free_center", {s.center.x, s.center.y}},
                     {"free_sigma", s.sigma},
                     {"free_phase", s.phase}});
  }
  json detectors = json::object();
  const double branch_factor = c.splitter.enabled ? 1.0 / std::sqrt(2.0) : 1.0;
  for (const auto& d : c.detectors) {
    // Each detector sees one splitter copy of the freely evolved source.
    double modulus = std::abs(oracle_overlap(d.final_packet, d.age, c.source, c.t_final));
    if (c.splitter.enabled) {
      // Reflected port: the source rotated onto the out axis about the splitter.
      const Point center = rotate_point(c.source.center(), c.splitter.position, 1);
      const GaussianSpec rotated{center.x, center.y, c.source.sigma, -c.source.ky, c.source.kx};
      modulus = std::max(modulus, std::abs(oracle_overlap(d.final_packet, d.age, rotated, c.t_final)));
    }
    detectors[d.name] = {{"overlap_modulus", modulus},
                         {"expected_abs_A", branch_factor * modulus},
                         {"expected_P", branch_factor * branch_factor * modulus * modulus}};
  }
  return {{"snapshots", times}, {"detectors", detectors}};
}

}  // namespace stqm
