// Copyright 2026 The lampcs Authors.
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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "lampcs/types.hpp"

namespace lampcs {

/// Relative recovery: |true n est| / |true|. Throws EmptyTrueSupportError
/// when the true support is empty.
double relative_recovery(const SupportSet& true_support,
                         const SupportSet& estimated);
double relative_recovery(const SupportSet2D& true_support,
                         const SupportSet2D& estimated);

/// Per-entry mean squared error. Shapes must match.
double mse(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat);
double mse(const Eigen::MatrixXd& x, const Eigen::MatrixXd& x_hat);

/// Exact-recovery bookkeeping. SetEqual demands identical sets; Superset
/// only that the estimate covers the true support.
enum class ExactMode { SetEqual, Superset };

bool exact_recovery(const SupportSet& true_support,
                    const SupportSet& estimated, ExactMode mode);
bool exact_recovery(const SupportSet2D& true_support,
                    const SupportSet2D& estimated, ExactMode mode);

/// One Monte-Carlo trial row. `exact` records set equality; superset-mode
/// success is recoverable as rr == 1.
struct TrialRecord {
  int m = 0;
  int trial = 0;
  std::string algorithm;
  double rr = 0.0;
  bool exact = false;
  double mse = 0.0;
  int seed_searches = 0;
  std::int64_t runtime_us = 0;
};

struct DiagramCell {
  int m = 0;
  int s = 0;  // in [1, trials per sweep point]
  double level_percent = 0.0;
};

/// Default recovery-rate levels (fractions) for the diagram.
std::vector<double> default_rr_levels();

/// Recovery diagram F(M, S): for every sweep point M and every
/// S in 1..S_max, the highest level f among `rr_levels` such that at least
/// S of the S_max trials achieved RR >= f (0 when none qualifies). Every M
/// must carry the same trial count. The grid is non-increasing in S.
std::vector<DiagramCell> recovery_diagram(
    const std::vector<TrialRecord>& records,
    const std::vector<double>& rr_levels);

}  // namespace lampcs
