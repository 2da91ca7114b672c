#pragma once

// Seeded verification batteries behind `weylccr verify`. Each battery is a
// list of named checks; a check records the worst observed value and the
// witness that produced it.

#include <cstdint>
#include <string>
#include <vector>

#include "weylccr/json_io.hpp"

namespace weylccr {

struct RunConfig {
  double tolerance = 1e-10;
  std::uint64_t seed = 1;
  FramePtr frame;  ///< optional; batteries fall back to a built-in frame set
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CheckReport> checks;

  bool pass() const;
  std::string render_text() const;
  json_io::json to_json() const;
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Runs one battery, or every battery for "all". Throws InvalidArgument for
/// unknown names.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

/// Consecutive weak-* distances along a sampled path on the fixed probe set.
struct PathDemoReport {
  std::string kind;
  std::size_t grid = 0;
  std::vector<double> distances;
  double max_distance = 0.0;
  double mean_distance = 0.0;
  /// max_distance * grid, the measured Lipschitz constant.
  double lipschitz_constant = 0.0;
  double endpoint_error = 0.0;

  std::string render_text() const;
  json_io::json to_json() const;
};

PathDemoReport path_demo(PathKind kind, const StateModel& from, const StateModel& to, std::size_t grid,
                         const FramePtr& frame);

}  // namespace weylccr
