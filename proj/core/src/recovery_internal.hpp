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
#include <optional>
#include <vector>

#include "lampcs/incremental_qr.hpp"
#include "lampcs/recovery.hpp"
#include "lampcs/sensing.hpp"

namespace lampcs::internal {

/// Built-in relative floor: every algorithm treats |r| <= 1e-12 |y| (and
/// best correlations at that level) as an exhausted residue.
inline constexpr double kResidueFloor = 1e-12;

/// Oracle-mode guards clamp the delta proxy below 1 and never drop beneath
/// this fraction of |y|^2, which keeps squared floating-point noise
/// (~1e-32 |y|^2) from passing a zero theoretical bound.
inline constexpr double kOracleFloor = 1e-24;
inline constexpr double kOracleDeltaCap = 0.999;

void require_normalized(const SensingMatrix& a);

/// Shared state of the single-measurement greedy loops: the residue, the
/// incremental factorization of the selected columns and the bookkeeping
/// counters. The residue is updated incrementally on every commit, so it
/// stays orthogonal to the selected span and its norm never increases.
class SmvEngine {
 public:
  SmvEngine(const SensingMatrix& a, const Eigen::VectorXd& y);

  int support_size() const { return static_cast<int>(result_.support.size()); }
  bool residue_small(const std::optional<double>& stop_rel) const;
  bool saturated() const;
  bool is_selected(int index) const {
    return selected_[static_cast<std::size_t>(index)] != 0;
  }

  /// Full argmax |<A_j, r>| scan over unselected columns; counts as one
  /// greedy seed search. Returns -1 when no usable correlation remains.
  int seed_scan();

  /// Full argmax residue-drop scan (the least-squares selection rule);
  /// also counts as one greedy search.
  int drop_scan();

  /// Squared-residue drop if `index` were added; 0 for selected or
  /// span-degenerate columns.
  double candidate_drop(int index) const;
  bool candidate_degenerate(int index) const;

  void commit(int index);

  RecoveryResult finish(StopReason reason);

  RecoveryResult& result() { return result_; }
  const Eigen::VectorXd& residue() const { return residue_; }
  double y_norm() const { return y_norm_; }
  const std::vector<char>& selected_flags() const { return selected_; }

 private:
  const Eigen::MatrixXd& a_;
  Eigen::VectorXd y_;
  Eigen::VectorXd residue_;
  double y_norm_ = 0.0;
  IncrementalQr qr_;
  std::vector<char> selected_;
  RecoveryResult result_;
};

/// Energy of the oracle signal outside the selected index set.
double uncovered_sq(const Eigen::VectorXd& x,
                    const std::vector<char>& selected);

/// Evaluates the neighbor-guard threshold for the configured epsilon mode.
class GuardThreshold {
 public:
  GuardThreshold(const SensingMatrix& a, const LampConfig& config,
                 double y_norm);

  /// Threshold given the current squared residue norm and, for oracle mode,
  /// the uncovered oracle energy. `epsilon` is the mode's tuning value.
  double threshold(double residue_sq, double uncovered_sq,
                   double epsilon) const;

  /// SMV vertical-scan threshold from live engine state.
  double vertical(const SmvEngine& engine) const;

 private:
  const LampConfig& config_;
  double y_sq_ = 0.0;
  double ratio_sq_ = 0.0;  // (delta / (1 - delta))^2, oracle mode only
};

}  // namespace lampcs::internal
