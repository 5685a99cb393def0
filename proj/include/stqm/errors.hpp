#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace stqm {

/// Invalid user-facing configuration (bad grid, inconsistent times, unknown keys).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physics guard tripped: field mass reached the periodic boundary, or a
/// splitter saw momentum content it has no port for.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what, std::optional<double> time = std::nullopt)
      : std::runtime_error(time ? what + " (t=" + std::to_string(*time) + ")" : what), time_(time) {}

  std::optional<double> time() const { return time_; }

 private:
  std::optional<double> time_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stqm
