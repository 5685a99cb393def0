#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>
#include "stqm/gaussian.hpp"
#include "stqm/grid.hpp"
#include "stqm/optics.hpp"

namespace stqm {

enum class Theory { CT, ST, Both };
enum class Branch { D1, D2 };

std::string to_string(Theory t);
std::string to_string(Branch b);
Theory theory_from_string(const std::string& s);
Branch branch_from_string(const std::string& s);

/// A sampling instant. At the splitter event the state is discontinuous, so
/// snapshots there carry a side: "1000-" (before the event) or "1000+" (after).
struct SnapshotTime {
  enum class Side { At, Before, After };
  double t = 0.0;
  Side side = Side::At;

  std::string label() const;
  static SnapshotTime parse(const std::string& label);

  friend bool operator==(const SnapshotTime&, const SnapshotTime&) = default;
};

/// Orders by time, with Before < At < After at equal times.
bool snapshot_before(const SnapshotTime& a, const SnapshotTime& b);

/// One complete experiment: geometry, times, grid, branch selection and theory mode.
struct ExperimentConfig {
  Grid2D grid{1024, 1024, 2.0, 2.0, -624.0, -1024.0};
  GaussianSpec source{0.0, 0.0, 20.0, 0.4, 0.0};
  SplitterSpec splitter;
  std::array<DetectorSpec, 2> detectors;
  double t_final = 2000.0;
  double dt = 1.0;
  std::vector<SnapshotTime> snapshot_times;
  Theory mode = Theory::ST;
  Branch branch = Branch::D1;
  double guard_interval = 100.0;
  double modality_threshold = 0.05;

  const DetectorSpec& detector(Branch b) const { return detectors[b == Branch::D1 ? 0 : 1]; }
  const DetectorSpec& selected_detector() const { return detector(branch); }

  /// The default beam-splitter experiment.
  static ExperimentConfig defaults();
};

/// Middle half of the splitter-to-detector segment, 6 sigma wide.
Rect default_corridor(Point splitter, Point detector, double sigma);

/// Parses a config document. Missing keys take defaults; unknown keys throw ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Every effective parameter, defaults included.
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Throws ConfigError on invalid configs; returns non-fatal warnings.
std::vector<std::string> validate_config(const ExperimentConfig& config);

/// FNV-1a 64 of the canonical JSON echo, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

}  // namespace stqm
