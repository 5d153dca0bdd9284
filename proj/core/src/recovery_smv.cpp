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

#include <algorithm>
#include <cmath>
#include <limits>

#include "lampcs/errors.hpp"
#include "lampcs/incremental_qr.hpp"
#include "lampcs/recovery.hpp"
#include "recovery_internal.hpp"

namespace lampcs {

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::SparsityReached:
      return "SparsityReached";
    case StopReason::ResidueSmall:
      return "ResidueSmall";
    case StopReason::MaxGroups:
      return "MaxGroups";
    case StopReason::SupportSaturated:
      return "SupportSaturated";
  }
  return "Unknown";
}

EpsilonMode parse_epsilon_mode(const std::string& name) {
  if (name == "absolute") return EpsilonMode::Absolute;
  if (name == "relative") return EpsilonMode::RelativeToResidue;
  if (name == "oracle") return EpsilonMode::Oracle;
  throw ConfigError("unknown epsilon mode: " + name);
}

std::string to_string(EpsilonMode mode) {
  switch (mode) {
    case EpsilonMode::Absolute:
      return "absolute";
    case EpsilonMode::RelativeToResidue:
      return "relative";
    case EpsilonMode::Oracle:
      return "oracle";
  }
  return "unknown";
}

void LampConfig::validate(bool mmv) const {
  if (sparsity < 0) throw ConfigError("lamp: sparsity must be >= 0");
  if (epsilon < 0.0) throw ConfigError("lamp: epsilon must be >= 0");
  if (epsilon_prime && *epsilon_prime < 0.0) {
    throw ConfigError("lamp: epsilon_prime must be >= 0");
  }
  if (merge_gap < 0) throw ConfigError("lamp: merge_gap must be >= 0");
  if (max_groups && *max_groups < 1) {
    throw ConfigError("lamp: max_groups must be >= 1");
  }
  if (residue_stop && *residue_stop < 0.0) {
    throw ConfigError("lamp: residue_stop must be >= 0");
  }
  if (sparsity == 0 && !max_groups && !residue_stop) {
    throw ConfigError("lamp: no stop criterion set");
  }
  if (epsilon_mode == EpsilonMode::Oracle) {
    if (!mmv && !oracle_signal) {
      throw ConfigError("lamp: oracle mode needs oracle_signal");
    }
    if (mmv && !oracle_signal_mmv) {
      throw ConfigError("lamp: oracle mode needs oracle_signal_mmv");
    }
  }
}

namespace internal {

void require_normalized(const SensingMatrix& a) {
  if (!a.normalized) {
    throw NotNormalizedError("recovery: sensing matrix must be normalized");
  }
}

SmvEngine::SmvEngine(const SensingMatrix& a, const Eigen::VectorXd& y)
    : a_(a.matrix),
      y_(y),
      residue_(y),
      y_norm_(y.norm()),
      qr_(a.matrix.rows()),
      selected_(static_cast<std::size_t>(a.matrix.cols()), 0) {
  if (a.matrix.rows() != y.size()) {
    throw ShapeMismatchError("recovery: measurement length mismatch");
  }
  result_.residue_norms.push_back(residue_.norm());
}

bool SmvEngine::residue_small(const std::optional<double>& stop_rel) const {
  double threshold = kResidueFloor * y_norm_;
  if (stop_rel) threshold = std::max(threshold, *stop_rel * y_norm_);
  return residue_.norm() <= threshold;
}

bool SmvEngine::saturated() const { return qr_.size() >= a_.rows(); }

int SmvEngine::seed_scan() {
  ++result_.seed_searches;
  const Eigen::VectorXd corr = a_.transpose() * residue_;
  int best = -1;
  double best_abs = 0.0;
  for (int j = 0; j < static_cast<int>(a_.cols()); ++j) {
    if (selected_[static_cast<std::size_t>(j)]) continue;
    const double c = std::abs(corr[j]);
    if (c > best_abs) {  // strict: ties keep the lowest index
      best_abs = c;
      best = j;
    }
  }
  if (best < 0 || best_abs <= kResidueFloor * y_norm_) return -1;
  return best;
}

void SmvEngine::commit(int index) {
  qr_.push_column(a_.col(index));
  const auto q_new = qr_.basis().col(qr_.size() - 1);
  residue_ -= q_new * q_new.dot(residue_);
  selected_[static_cast<std::size_t>(index)] = 1;
  result_.support.push_back(index);
  ++result_.iterations;
  result_.residue_norms.push_back(residue_.norm());
}

double SmvEngine::candidate_drop(int index) const {
  if (selected_[static_cast<std::size_t>(index)]) return 0.0;
  const Eigen::VectorXd orth = qr_.orthogonalize(a_.col(index));
  const double orth_norm = orth.norm();
  if (!(orth_norm > IncrementalQr::kRankTol * a_.col(index).norm())) {
    return 0.0;
  }
  const double projection = orth.dot(residue_) / orth_norm;
  return projection * projection;
}

RecoveryResult SmvEngine::finish(StopReason reason) {
  result_.stop_reason = reason;
  result_.coefficients =
      qr_.size() > 0 ? qr_.solve(y_) : Eigen::VectorXd(0);
  return std::move(result_);
}

}  // namespace internal

namespace {

using internal::SmvEngine;

RecoveryResult greedy_single(const SensingMatrix& a, const Eigen::VectorXd& y,
                             int sparsity,
                             const std::optional<double>& residue_stop,
                             bool least_squares_selection) {
  internal::require_normalized(a);
  if (sparsity < 0 || sparsity > a.rows()) {
    throw ConfigError("greedy recovery: need 0 <= sparsity <= rows");
  }

  SmvEngine engine(a, y);
  while (engine.support_size() < sparsity) {
    if (engine.residue_small(residue_stop)) {
      return engine.finish(StopReason::ResidueSmall);
    }
    if (engine.saturated()) {
      return engine.finish(StopReason::SupportSaturated);
    }
    const int pick =
        least_squares_selection ? engine.drop_scan() : engine.seed_scan();
    if (pick < 0) return engine.finish(StopReason::ResidueSmall);
    engine.commit(pick);
  }
  return engine.finish(StopReason::SparsityReached);
}

}  // namespace

namespace internal {

int SmvEngine::drop_scan() {
  ++result_.seed_searches;
  // drop_j = <A_j, r>^2 / |P^perp A_j|^2 with |P^perp A_j|^2 computed as
  // |A_j|^2 - |Q^T A_j|^2 (Q orthonormal).
  const Eigen::VectorXd corr = a_.transpose() * residue_;
  Eigen::VectorXd span_part = Eigen::VectorXd::Zero(a_.cols());
  if (qr_.size() > 0) {
    span_part = (qr_.basis().transpose() * a_).colwise().squaredNorm();
  }
  int best = -1;
  double best_drop = 0.0;
  for (int j = 0; j < static_cast<int>(a_.cols()); ++j) {
    if (selected_[static_cast<std::size_t>(j)]) continue;
    const double col_sq = a_.col(j).squaredNorm();
    const double orth_sq = col_sq - span_part[j];
    const double tol = IncrementalQr::kRankTol * IncrementalQr::kRankTol;
    if (orth_sq <= tol * col_sq) continue;
    const double drop = corr[j] * corr[j] / orth_sq;
    if (drop > best_drop) {
      best_drop = drop;
      best = j;
    }
  }
  const double floor = kResidueFloor * y_norm_;
  if (best < 0 || best_drop <= floor * floor) return -1;
  return best;
}

}  // namespace internal

RecoveryResult omp(const SensingMatrix& a, const Eigen::VectorXd& y,
                   int sparsity, std::optional<double> residue_stop) {
  return greedy_single(a, y, sparsity, residue_stop, false);
}

RecoveryResult ols(const SensingMatrix& a, const Eigen::VectorXd& y,
                   int sparsity, std::optional<double> residue_stop) {
  return greedy_single(a, y, sparsity, residue_stop, true);
}

RecoveryResult bomp(const SensingMatrix& a, const Eigen::VectorXd& y,
                    int block_size, int stop_blocks, BlockNorm block_norm,
                    std::optional<double> residue_stop) {
  internal::require_normalized(a);
  const int n = static_cast<int>(a.cols());
  if (block_size < 1 || block_size > n) {
    throw ConfigError("bomp: need 1 <= block_size <= cols");
  }
  if (stop_blocks < 0) throw ConfigError("bomp: stop_blocks must be >= 0");

  const int block_count = (n + block_size - 1) / block_size;
  SmvEngine engine(a, y);
  int blocks_selected = 0;

  while (blocks_selected < stop_blocks) {
    if (engine.residue_small(residue_stop)) {
      return engine.finish(StopReason::ResidueSmall);
    }
    if (engine.saturated()) {
      return engine.finish(StopReason::SupportSaturated);
    }

    ++engine.result().seed_searches;
    const Eigen::VectorXd corr = a.matrix.transpose() * engine.residue();
    int best_block = -1;
    double best_score = 0.0;
    for (int block = 0; block < block_count; ++block) {
      const int begin = block * block_size;
      const int end = std::min(begin + block_size, n);
      bool any_unselected = false;
      double score = 0.0;
      for (int j = begin; j < end; ++j) {
        if (!engine.is_selected(j)) any_unselected = true;
        score += block_norm == BlockNorm::L1 ? std::abs(corr[j])
                                             : corr[j] * corr[j];
      }
      if (block_norm == BlockNorm::L2) score = std::sqrt(score);
      if (!any_unselected) continue;
      if (score > best_score) {
        best_score = score;
        best_block = block;
      }
    }
    if (best_block < 0 ||
        best_score <= internal::kResidueFloor * engine.y_norm()) {
      return engine.finish(StopReason::ResidueSmall);
    }

    const int begin = best_block * block_size;
    const int end = std::min(begin + block_size, n);
    for (int j = begin; j < end; ++j) {
      if (engine.is_selected(j)) continue;
      if (engine.saturated()) {
        return engine.finish(StopReason::SupportSaturated);
      }
      // Columns already spanned by the support contribute nothing; skip
      // them instead of failing the factorization.
      if (engine.candidate_degenerate(j)) continue;
      engine.commit(j);
    }
    ++blocks_selected;
  }
  return engine.finish(StopReason::SparsityReached);
}

namespace internal {

bool SmvEngine::candidate_degenerate(int index) const {
  const Eigen::VectorXd orth = qr_.orthogonalize(a_.col(index));
  return !(orth.norm() > IncrementalQr::kRankTol * a_.col(index).norm());
}

}  // namespace internal

RecoveryResult lamp_smv(const SensingMatrix& a, const Eigen::VectorXd& y,
                        const LampConfig& config) {
  internal::require_normalized(a);
  config.validate(/*mmv=*/false);
  const int sparsity_cap =
      config.sparsity > 0 ? config.sparsity : static_cast<int>(a.rows());
  if (sparsity_cap > a.rows()) {
    throw ConfigError("lamp: sparsity exceeds measurement count");
  }
  if (config.oracle_signal &&
      config.oracle_signal->size() != a.cols()) {
    throw ShapeMismatchError("lamp: oracle signal length mismatch");
  }

  SmvEngine engine(a, y);
  const internal::GuardThreshold guard(a, config, engine.y_norm());

  while (engine.support_size() < sparsity_cap) {
    if (engine.residue_small(config.residue_stop)) {
      return engine.finish(StopReason::ResidueSmall);
    }
    if (config.max_groups &&
        static_cast<int>(engine.result().groups.size()) >=
            *config.max_groups) {
      return engine.finish(StopReason::MaxGroups);
    }
    if (engine.saturated()) {
      return engine.finish(StopReason::SupportSaturated);
    }

    const int seed = engine.seed_scan();
    if (seed < 0) return engine.finish(StopReason::ResidueSmall);
    engine.commit(seed);

    GroupRecord group;
    group.seed_row = seed;

    // Vertical scans from the seed; each accepted neighbor re-arms the
    // threshold (the residue and the uncovered oracle support both shrink).
    for (int direction : {-1, +1}) {
      int steps = 1;
      while (true) {
        if (engine.support_size() >= sparsity_cap || engine.saturated()) break;
        const int candidate = seed + direction * steps;
        if (candidate < 0 || candidate >= a.cols()) break;
        if (engine.is_selected(candidate)) break;
        const double drop = engine.candidate_drop(candidate);
        const double epsilon = guard.vertical(engine);
        if (!(drop > epsilon)) break;
        engine.commit(candidate);
        ++steps;
      }
      (direction < 0 ? group.k_up : group.k_down) = steps;
    }

    for (int j = seed - (group.k_up - 1); j <= seed + (group.k_down - 1);
         ++j) {
      group.members.push_back(j);
    }
    engine.result().groups.push_back(std::move(group));
  }
  return engine.finish(StopReason::SparsityReached);
}

namespace internal {

GuardThreshold::GuardThreshold(const SensingMatrix& a,
                               const LampConfig& config, double y_norm)
    : config_(config), y_sq_(y_norm * y_norm) {
  if (config.epsilon_mode == EpsilonMode::Oracle) {
    double delta =
        config.oracle_delta ? *config.oracle_delta : coherence(a);
    delta = std::min(delta, kOracleDeltaCap);
    const double ratio = delta / (1.0 - delta);
    ratio_sq_ = ratio * ratio;
  }
}

double GuardThreshold::threshold(double residue_sq, double uncovered_sq,
                                 double epsilon) const {
  switch (config_.epsilon_mode) {
    case EpsilonMode::Absolute:
      return epsilon;
    case EpsilonMode::RelativeToResidue:
      return epsilon * residue_sq;
    case EpsilonMode::Oracle:
      // Numerical floor so a zero oracle bound (orthonormal A or fully
      // covered support) cannot admit floating-point noise.
      return std::max(ratio_sq_ * uncovered_sq, kOracleFloor * y_sq_);
  }
  return epsilon;
}

double GuardThreshold::vertical(const SmvEngine& engine) const {
  const double uncovered =
      config_.epsilon_mode == EpsilonMode::Oracle
          ? uncovered_sq(*config_.oracle_signal, engine.selected_flags())
          : 0.0;
  const double residue_sq = engine.residue().squaredNorm();
  return threshold(residue_sq, uncovered, config_.epsilon);
}

double uncovered_sq(const Eigen::VectorXd& x,
                    const std::vector<char>& selected) {
  double sum = 0.0;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (!selected[static_cast<std::size_t>(j)]) sum += x[j] * x[j];
  }
  return sum;
}

}  // namespace internal

}  // namespace lampcs
