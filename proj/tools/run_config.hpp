#pragma once

// Run configuration for the fucik tool, loaded from YAML.
//
//   n: 1
//   oscillators:
//     - a: 1            # b optional; completed from a on the resonance curve
//       forcing: {constant: 0, harmonics: [{k: 2, cos: 1, sin: 0}]}
//       coupling: {family: smooth_step, limit: 0.5, width: 1}
//     - a: 1
//       forcing: {harmonics: [{k: 1, cos: 1}]}
//       coupling: {family: smooth_step, limit: 0.25}
//   integrator: {rel_tol: 1e-10, abs_tol: 1e-12, max_step: 0.0314}
//   seed: 1
//   output: out
//   run: {grid: 32, tol: 1e-10, samples: 500, direction: forward,
//         zero_index: 0, start: [t1, t2, r1, r2], iterations: 200,
//         matrix: [a11, a12, a21, a22]}
//
// Unknown keys anywhere are rejected.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fucik/dynamics.hpp"
#include "fucik/matrix2.hpp"
#include "fucik/system.hpp"

namespace fucik::cli {

/// File system or stream failure; maps to exit status 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunParams {
  std::optional<int> grid;
  std::optional<double> tol;
  std::optional<int> samples;
  std::optional<Direction> direction;
  std::optional<int> zero_index;
  std::optional<std::array<double, 4>> start;
  std::optional<int> iterations;
  std::optional<Matrix2> matrix;
};

struct RunConfig {
  std::optional<SystemConfig> system;
  IntegratorSettings integrator;
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  RunParams run;
};

/// Throws PreconditionError on malformed content or unknown keys, IoError if unreadable.
RunConfig load_config_file(const std::string& path);
RunConfig load_config_text(const std::string& yaml);

/// Tolerance for a user-supplied b against the resonance identity.
inline constexpr double kIdentityTolerance = 1e-9;

/// Parses "cos2:1,sin1:0.5,const:0.2" into a forcing signal.
ForcingSignal parse_forcing(const std::string& text);

/// Parses a comma-separated list of exactly `count` numbers.
std::vector<double> parse_numbers(const std::string& text, std::size_t count = 0);

nlohmann::json to_json(const RunConfig& cfg);

}  // namespace fucik::cli
