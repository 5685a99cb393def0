#pragma once

#include <cmath>
#include <complex>

#include <json.hpp>

#include "stqm/config.hpp"

namespace stqm::fixtures {

// Scaled-down beam-splitter geometry: 512^2 nodes, splitter at (80, 0) reached at t = 100.
inline nlohmann::json small_splitter_doc() {
  return nlohmann::json::parse(R"({
    "grid": {"nx": 512, "ny": 512, "dx": 1.0, "dy": 1.0, "x0": -176.0, "y0": -256.0},
    "source": {"cx": 0.0, "cy": 0.0, "sigma": 10.0, "kx": 0.8, "ky": 0.0},
    "splitter": {"position": [80.0, 0.0], "event_time": 100.0},
    "detectors": {
      "d1": {"final_packet": {"cx": 160.0, "cy": 0.0, "sigma": 10.0, "kx": 0.8, "ky": 0.0}},
      "d2": {"final_packet": {"cx": 80.0, "cy": 80.0, "sigma": 10.0, "kx": 0.0, "ky": 0.8}}
    },
    "t_final": 200.0,
    "dt": 1.0,
    "snapshot_times": [0, 50, "100-", "100+", 150, 200],
    "mode": "both"
  })");
}

// No splitter; D1's final condition is the freely evolved source itself.
inline nlohmann::json trivial_postselection_doc() {
  return nlohmann::json::parse(R"({
    "grid": {"nx": 256, "ny": 256, "dx": 1.0, "dy": 1.0, "x0": -110.0, "y0": -128.0},
    "source": {"cx": 0.0, "cy": 0.0, "sigma": 10.0, "kx": 0.4, "ky": 0.0},
    "splitter": {"enabled": false},
    "detectors": {
      "d1": {"final_packet": {"cx": 0.0, "cy": 0.0, "sigma": 10.0, "kx": 0.4, "ky": 0.0}, "age": 100.0},
      "d2": {"final_packet": {"cx": 20.0, "cy": 20.0, "sigma": 10.0, "kx": 0.0, "ky": 0.4}}
    },
    "t_final": 100.0,
    "dt": 1.0,
    "snapshot_times": [0, 50, 100],
    "mode": "both"
  })");
}

inline ExperimentConfig small_splitter() { return config_from_json(small_splitter_doc()); }
inline ExperimentConfig trivial_postselection() { return config_from_json(trivial_postselection_doc()); }

// Width of a freely spreading Gaussian |psi|^2 written out from the textbook
// dispersion law, kept separate from the library oracle.
inline double textbook_sigma(double sigma0, double t) {
  const double tau = t / (2.0 * sigma0 * sigma0);
  return sigma0 * std::sqrt(1.0 + tau * tau);
}

}  // namespace stqm::fixtures
