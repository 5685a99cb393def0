#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stqm/errors.hpp"
#include "stqm/experiment.hpp"
#include "stqm/io.hpp"

namespace {

enum Exit { kOk = 0, kValidation = 1, kPhysics = 2, kIo = 3 };

stqm::ExperimentConfig load(const std::string& path, const std::optional<std::string>& mode,
                            const std::optional<std::string>& branch) {
  stqm::ExperimentConfig c = stqm::load_config(path);
  if (mode) c.mode = stqm::theory_from_string(*mode);
  if (branch) c.branch = stqm::branch_from_string(*branch);
  for (const auto& w : stqm::validate_config(c)) std::cerr << "warning: " << w << '\n';
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Retarded/advanced wave simulation of a two-detector beam-splitter experiment"};
  app.set_version_flag("--version", STQM_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::string> mode;
  std::optional<std::string> branch;
  int stride = 1;

  auto* run = app.add_subcommand("run", "Run the experiment and write snapshots plus report.json");
  run->add_option("--config", config_path, "Config file (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--mode", mode, "ct, st or both")->check(CLI::IsMember({"ct", "st", "both"}));
  run->add_option("--branch", branch, "d1 or d2")->check(CLI::IsMember({"d1", "d2"}));
  run->add_option("--stride", stride, "Write every n-th node per axis")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run the invariant checks and print pass/fail per check");
  ver->add_option("--config", config_path, "Config file (JSON)")->required();
  ver->add_option("--out", out_dir, "Directory for verify.json");

  auto* orc = app.add_subcommand("oracle", "Print closed-form predictions for the config");
  orc->add_option("--config", config_path, "Config file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*run) {
      const stqm::ExperimentConfig c = load(config_path, mode, branch);
      const stqm::RunArtifacts a = stqm::run_experiment(c);
      stqm::write_artifacts(a, c, out_dir, stride);
      const auto& r = a.report;
      std::printf("branch %s  P(d1)=%.6f  P(d2)=%.6f", r.branch.c_str(), r.P_detectors[0], r.P_detectors[1]);
      if (r.st) std::printf("  |A_s|=%.6f  P_s=%.6f", std::abs(r.A_s), r.P_s);
      std::printf("\n");
    } else if (*ver) {
      const stqm::ExperimentConfig c = load(config_path, std::nullopt, std::nullopt);
      const stqm::VerifyReport v = stqm::verify(c);
      for (const auto& check : v.checks) {
        std::printf("%s %-32s measured=%.6e %s %.3e %s\n", check.passed ? "PASS" : "FAIL", check.name.c_str(),
                    check.measured, check.comparison.c_str(), check.threshold, check.detail.c_str());
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        stqm::write_json(stqm::verify_to_json(v), std::filesystem::path(out_dir) / "verify.json");
      }
      std::printf("all_passed=%s\n", v.all_passed() ? "true" : "false");
    } else if (*orc) {
      const stqm::ExperimentConfig c = load(config_path, std::nullopt, std::nullopt);
      std::cout << stqm::oracle_predictions(c).dump(2) << '\n';
    }
  } catch (const stqm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kValidation;
  } catch (const stqm::GeometryError& e) {
    std::cerr << "physics guard: " << e.what() << '\n';
    return kPhysics;
  } catch (const stqm::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
