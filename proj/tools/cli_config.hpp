#pragma once

// Run configuration: a JSON document plus command-line overrides, validated
// strictly (unknown keys are hard errors naming the offending path).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace cli {

// Input/config problems: exit code 1.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite results outside documented limit conventions: exit code 2.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_CONFIG = 1;
inline constexpr int EXIT_NUMERIC = 2;
inline constexpr int EXIT_AUDIT = 3;

struct Overrides {
  std::optional<std::string> output;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<long long> n_points;
  std::optional<std::uint64_t> seed;
  std::optional<long long> n_samples;
  std::optional<double> dt;
  std::optional<double> duration;
};

struct GridSpec {
  double r_min = 0.0;
  double r_max = 0.0;
  long long n_points = 0;
  bool log_spacing = false;
};

struct TimeSpec {
  double duration = 0.0;
  double dt = 0.0;
};

struct McSpec {
  long long n_samples = 200000;
  std::uint64_t seed = 1;
};

struct RunConfig {
  std::string command;  // sweep | dynamics | audit | regime
  std::string model;    // pair_raw | pair_averaged | driven | bloch2 | dirac4
  std::string output;   // empty: stdout
  nlohmann::json params;  // validated per model/command
  GridSpec grid;
  TimeSpec time;
  McSpec mc;
};

// Loads the file (empty path: an empty document), applies overrides, and
// validates keys and constraints for the given command. Throws config_error.
RunConfig parse_config(const std::string& command, const std::string& config_path,
                       const Overrides& overrides);

// Helpers shared by the command implementations; all throw config_error with
// the full key path on any violation.
double get_number(const nlohmann::json& obj, const std::string& path, const std::string& key,
                  std::optional<double> fallback = std::nullopt);
long long get_integer(const nlohmann::json& obj, const std::string& path, const std::string& key,
                      std::optional<long long> fallback = std::nullopt);
void get_vec3(const nlohmann::json& obj, const std::string& path, const std::string& key,
              double fallback[3], double out[3]);

}  // namespace cli
