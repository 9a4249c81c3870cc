// Copyright 2026 The cliffordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Invariant suites shared by the CLI `verify` commands.

#include <cstdint>
#include <string>
#include <vector>

#include "cliffordlab/json_io.hpp"

namespace cliffordlab {

struct RunConfig {
  int n = 3;
  int max_k = 12;       // Appell degree / truncation order
  int max_degree = 7;   // Taylor degree for Fueter and polyanalytic checks
  int m = 2;            // polyanalytic order minus one
  int trials = 50;
  double tol = 1e-10;
  std::uint64_t seed = 7;

  /// Applies CLIFFORDLAB_TOL when set.
  static RunConfig with_env_defaults();
  /// Throws std::invalid_argument for even n, n outside [1, 11], tol <= 0.
  void validate() const;
};

struct Failure {
  std::string check;
  std::string input;
};

struct VerificationReport {
  std::string suite;
  long cases = 0;
  std::vector<Failure> failures;
  double max_residual = 0.0;
  double wall_time_s = 0.0;

  bool passed() const { return failures.empty(); }
  void record(const std::string& check, bool ok, const std::string& input = {});
  void record_residual(const std::string& check, double residual, double tol, const std::string& input = {});
  void merge(const VerificationReport& other);
  /// Wall time is only serialized when include_timing is set, so reports
  /// are byte-identical for identical configurations.
  json to_json(const RunConfig& config, bool include_timing) const;
};

/// suite: algebra | appell | fueter | elementary | rkhs | polyanalytic | all
/// (plus rkhs sub-suites operators | kernel | bounds and polyanalytic
/// sub-suite relation). Throws std::invalid_argument for unknown suites.
VerificationReport run_suite(const std::string& suite, const RunConfig& config);

std::vector<std::string> suite_names();

}  // namespace cliffordlab
