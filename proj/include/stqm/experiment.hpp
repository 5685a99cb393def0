#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stqm/amplitudes.hpp"
#include "stqm/config.hpp"
#include "stqm/observables.hpp"

namespace stqm {

/// Retarded and advanced wave states at the sorted snapshot times (plus t = 0
/// and t_final, which the amplitudes always need).
struct WaveHistory {
  std::vector<SnapshotTime> times;
  std::vector<ComplexField> psi;
  /// Empty unless the backward wave was requested.
  std::vector<ComplexField> phi_star;

  std::size_t index_of(const SnapshotTime& t) const;
};

/// Forward-evolves psi from the source through the splitter and, if
/// `with_advanced`, backward-evolves phi* from the branch's final packet through
/// the adjoint splitter.
WaveHistory simulate_waves(const ExperimentConfig& config, Branch branch, bool with_advanced);

/// Local conservation residual at the state (psi, phi*) of one instant, using
/// free +/-dt propagation for the time difference. CT when phi_star is null.
double residual_at(const ComplexField& psi, const ComplexField* phi_star, double dt);

/// Shape statistics frame for a snapshot: whole plane along in_axis before the
/// event, the branch's half-plane along its outgoing axis after it.
ObservableFrame observable_frame(const ExperimentConfig& config, Branch branch, const SnapshotTime& t);

/// Per-theory time series.
struct TheorySeries {
  std::vector<SnapshotTime> times;
  /// CT: the norm integral of rho. ST: A_s.
  std::vector<Complex> integrals;
  std::vector<std::optional<double>> residuals;
  std::vector<SnapshotObservables> observables;

  std::vector<double> widths() const;
  std::vector<double> skewness() const;
};

struct RunReport {
  std::string branch;
  /// CT transition amplitude and probability against the configured branch.
  Complex A{};
  double P = 0.0;
  /// Against D1 and D2 in that order.
  std::array<Complex, 2> A_detectors{};
  std::array<double, 2> P_detectors{};

  std::optional<TheorySeries> ct;
  std::optional<TheorySeries> st;

  // ST scalars; meaningful when st is set.
  Complex A_s{};
  double P_s = 0.0;
  double A_s_max_relative_deviation = 0.0;
  double re_volume_max_relative_deviation = 0.0;
  double im_volume_max_relative_deviation = 0.0;
  /// |A - A_s| with A at t_final and A_s at t = 0.
  double equivalence_gap = 0.0;
  /// (|int rho_s|^2, int |rho_s|^2) at the mid-flight snapshot.
  std::optional<std::pair<double, double>> nonfactorization;
  std::optional<SnapshotTime> nonfactorization_time;
};

/// Exported density at one instant.
struct Snapshot {
  SnapshotTime time;
  Theory theory = Theory::CT;
  /// CT: rho = |psi|^2. ST: the complex rho_s.
  ComplexField density;
  /// CT: norm integral. ST: A_s.
  Complex integral{};
  /// True for the CT post-measurement rendering.
  bool collapsed = false;

  std::string label() const;
};

struct RunArtifacts {
  std::vector<Snapshot> snapshots;
  RunReport report;
  nlohmann::json provenance;
};

/// Runs the configured theory (or both, sharing the forward wave).
RunArtifacts run_experiment(const ExperimentConfig& config);

/// (A at t_final, A_s at t = 0) for the configured branch.
std::pair<Complex, Complex> equivalence_check_st_ct(const ExperimentConfig& config);

nlohmann::json report_to_json(const RunReport& report);

/// One verification check with its measured value and the threshold it was compared against.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison;  ///< "<", "<=", ">=", "within"
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Oracle agreement, unitarity, A_s invariance, conservation order, branch
/// symmetry and CT/ST equivalence on the given config.
VerifyReport verify(const ExperimentConfig& config);

nlohmann::json verify_to_json(const VerifyReport& report);

/// Analytic predictions for the config: centers and widths at the snapshot
/// times, detector overlaps and expected transition probabilities.
nlohmann::json oracle_predictions(const ExperimentConfig& config);

}  // namespace stqm
