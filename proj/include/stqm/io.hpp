#pragma once

#include <filesystem>

#include <json.hpp>

#include "stqm/experiment.hpp"

namespace stqm {

/// Writes `x,y,re,im,abs` rows (x fastest, every `stride`-th node per axis)
/// with 17 significant digits. abs is |value| * abs_scale.
void export_snapshot(const ComplexField& field, const std::filesystem::path& csv_path, const nlohmann::json& metadata,
                     double abs_scale = 1.0, int stride = 1);

/// Reads the re/im columns of a full-resolution snapshot back onto `grid`.
ComplexField import_snapshot(const std::filesystem::path& csv_path, const Grid2D& grid);

/// Sidecar path for a snapshot CSV (same stem, .json).
std::filesystem::path metadata_path(const std::filesystem::path& csv_path);

/// Sidecar metadata for one snapshot of a run.
nlohmann::json snapshot_metadata(const Snapshot& s, const ExperimentConfig& config, const std::string& hash);

/// Writes every snapshot plus report.json into out_dir (created if missing).
void write_artifacts(const RunArtifacts& artifacts, const ExperimentConfig& config,
                     const std::filesystem::path& out_dir, int stride = 1);

void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

/// Figure scaling of exported ST |rho_s| columns (per-branch share 2^-1/2).
inline const double kStAbsScale = 0.70710678118654752440;

}  // namespace stqm
