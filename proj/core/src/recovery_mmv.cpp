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
#include <utility>

#include "lampcs/errors.hpp"
#include "lampcs/incremental_qr.hpp"
#include "lampcs/recovery.hpp"
#include "recovery_internal.hpp"

namespace lampcs {

namespace {

using internal::kResidueFloor;

/// Per-column factorizations plus the residue matrix. A cell (row, col)
/// contributes column A_row to column col's factorization; the residue of
/// column p is always P^perp of Y_p against that column's selected rows.
class MmvEngine {
 public:
  MmvEngine(const SensingMatrix& a, const Eigen::MatrixXd& y)
      : a_(a.matrix), y_(y), residue_(y), y_frob_(y.norm()) {
    if (a.matrix.rows() != y.rows()) {
      throw ShapeMismatchError("lamp_mmv: measurement row mismatch");
    }
    const int p = static_cast<int>(y.cols());
    qr_.reserve(static_cast<std::size_t>(p));
    for (int col = 0; col < p; ++col) qr_.emplace_back(a_.rows());
    selected_.assign(
        static_cast<std::size_t>(a_.cols()) * static_cast<std::size_t>(p), 0);
    column_order_.resize(static_cast<std::size_t>(p));
    result_.mmv = true;
    result_.residue_norms.push_back(residue_.norm());
  }

  int rows() const { return static_cast<int>(a_.cols()); }
  int cols() const { return static_cast<int>(y_.cols()); }
  int support_size() const {
    return static_cast<int>(result_.support_2d.size());
  }
  double y_frob() const { return y_frob_; }
  double residue_sq() const { return residue_.squaredNorm(); }

  bool is_selected(int row, int col) const {
    return selected_[flat(row, col)] != 0;
  }

  bool residue_small(const std::optional<double>& stop_rel) const {
    double threshold = kResidueFloor * y_frob_;
    if (stop_rel) threshold = std::max(threshold, *stop_rel * y_frob_);
    return residue_.norm() <= threshold;
  }

  /// Argmax |<A_j, (R)_p>| over unselected cells, scanning columns then
  /// rows so ties resolve to the lowest (col, row) pair. Counts one greedy
  /// search. Returns {-1, -1} when nothing usable remains.
  Cell seed_scan() {
    ++result_.seed_searches;
    Cell best{-1, -1};
    double best_abs = 0.0;
    for (int col = 0; col < cols(); ++col) {
      const Eigen::VectorXd corr = a_.transpose() * residue_.col(col);
      for (int row = 0; row < rows(); ++row) {
        if (is_selected(row, col)) continue;
        const double c = std::abs(corr[row]);
        if (c > best_abs) {
          best_abs = c;
          best = {row, col};
        }
      }
    }
    if (best.row < 0 || best_abs <= kResidueFloor * y_frob_) {
      return {-1, -1};
    }
    return best;
  }

  double candidate_drop(int row, int col) const {
    if (is_selected(row, col)) return 0.0;
    const IncrementalQr& qr = qr_[static_cast<std::size_t>(col)];
    if (qr.size() >= qr.rows()) return 0.0;
    const Eigen::VectorXd orth = qr.orthogonalize(a_.col(row));
    const double orth_norm = orth.norm();
    if (!(orth_norm > IncrementalQr::kRankTol * a_.col(row).norm())) {
      return 0.0;
    }
    const double projection = orth.dot(residue_.col(col)) / orth_norm;
    return projection * projection;
  }

  void commit(int row, int col) {
    IncrementalQr& qr = qr_[static_cast<std::size_t>(col)];
    qr.push_column(a_.col(row));
    const auto q_new = qr.basis().col(qr.size() - 1);
    residue_.col(col) -= q_new * q_new.dot(residue_.col(col));
    selected_[flat(row, col)] = 1;
    column_order_[static_cast<std::size_t>(col)].push_back(support_size());
    result_.support_2d.push_back({row, col});
    ++result_.iterations;
    result_.residue_norms.push_back(residue_.norm());
  }

  /// Tentatively pushes the unselected, non-degenerate cells of
  /// rows x {col} and reports the Frobenius-squared drop. When the guard
  /// accepts, commit_block() finalizes; otherwise rollback_block() restores
  /// the factorization and residue exactly.
  struct Tentative {
    int col = -1;
    Eigen::Index qr_size = 0;
    Eigen::VectorXd saved_residue;
    std::vector<int> pushed_rows;
    double drop = 0.0;
  };

  Tentative try_block(const std::vector<int>& rows_in_block, int col) {
    Tentative tentative;
    tentative.col = col;
    IncrementalQr& qr = qr_[static_cast<std::size_t>(col)];
    tentative.qr_size = qr.size();
    tentative.saved_residue = residue_.col(col);

    for (int row : rows_in_block) {
      if (is_selected(row, col)) continue;
      if (qr.size() >= qr.rows()) break;
      const Eigen::VectorXd orth = qr.orthogonalize(a_.col(row));
      if (!(orth.norm() > IncrementalQr::kRankTol * a_.col(row).norm())) {
        continue;
      }
      qr.push_column(a_.col(row));
      const auto q_new = qr.basis().col(qr.size() - 1);
      residue_.col(col) -= q_new * q_new.dot(residue_.col(col));
      tentative.pushed_rows.push_back(row);
    }
    tentative.drop = tentative.saved_residue.squaredNorm() -
                     residue_.col(col).squaredNorm();
    return tentative;
  }

  void commit_block(const Tentative& tentative) {
    for (int row : tentative.pushed_rows) {
      selected_[flat(row, tentative.col)] = 1;
      column_order_[static_cast<std::size_t>(tentative.col)].push_back(
          support_size());
      result_.support_2d.push_back({row, tentative.col});
      ++result_.iterations;
    }
    result_.residue_norms.push_back(residue_.norm());
  }

  void rollback_block(const Tentative& tentative) {
    qr_[static_cast<std::size_t>(tentative.col)].truncate(tentative.qr_size);
    residue_.col(tentative.col) = tentative.saved_residue;
  }

  RecoveryResult finish(StopReason reason) {
    result_.stop_reason = reason;
    result_.coefficients = Eigen::VectorXd::Zero(support_size());
    for (int col = 0; col < cols(); ++col) {
      const auto& order = column_order_[static_cast<std::size_t>(col)];
      if (order.empty()) continue;
      const Eigen::VectorXd coeffs =
          qr_[static_cast<std::size_t>(col)].solve(y_.col(col));
      for (std::size_t i = 0; i < order.size(); ++i) {
        result_.coefficients[order[i]] = coeffs[static_cast<Eigen::Index>(i)];
      }
    }
    return std::move(result_);
  }

  RecoveryResult& result() { return result_; }
  const std::vector<char>& selected_flags() const { return selected_; }

 private:
  std::size_t flat(int row, int col) const {
    return static_cast<std::size_t>(col) * static_cast<std::size_t>(rows()) +
           static_cast<std::size_t>(row);
  }

  const Eigen::MatrixXd& a_;
  Eigen::MatrixXd y_;
  Eigen::MatrixXd residue_;
  double y_frob_ = 0.0;
  std::vector<IncrementalQr> qr_;
  std::vector<char> selected_;  // column-major cell flags
  // For each measurement column, the positions its cells occupy in the
  // global selection order; used to scatter per-column solves.
  std::vector<std::vector<int>> column_order_;
  RecoveryResult result_;
};

double uncovered_sq_mmv(const Eigen::MatrixXd& x, const MmvEngine& engine) {
  double sum = 0.0;
  for (int col = 0; col < static_cast<int>(x.cols()); ++col) {
    for (int row = 0; row < static_cast<int>(x.rows()); ++row) {
      if (!engine.is_selected(row, col)) sum += x(row, col) * x(row, col);
    }
  }
  return sum;
}

}  // namespace

RecoveryResult lamp_mmv(const SensingMatrix& a, const Eigen::MatrixXd& y,
                        const LampConfig& config) {
  internal::require_normalized(a);
  config.validate(/*mmv=*/true);
  if (config.oracle_signal_mmv &&
      (config.oracle_signal_mmv->rows() != a.cols() ||
       config.oracle_signal_mmv->cols() != y.cols())) {
    throw ShapeMismatchError("lamp_mmv: oracle signal shape mismatch");
  }

  MmvEngine engine(a, y);
  const internal::GuardThreshold guard(a, config, engine.y_frob());
  const int sparsity_cap =
      config.sparsity > 0
          ? config.sparsity
          : static_cast<int>(a.rows() * y.cols());

  const auto vertical_eps = [&] {
    const double uncovered =
        config.epsilon_mode == EpsilonMode::Oracle
            ? uncovered_sq_mmv(*config.oracle_signal_mmv, engine)
            : 0.0;
    return guard.threshold(engine.residue_sq(), uncovered, config.epsilon);
  };
  const auto horizontal_eps = [&] {
    const double uncovered =
        config.epsilon_mode == EpsilonMode::Oracle
            ? uncovered_sq_mmv(*config.oracle_signal_mmv, engine)
            : 0.0;
    return guard.threshold(engine.residue_sq(), uncovered,
                           config.epsilon_prime.value_or(config.epsilon));
  };

  while (engine.support_size() < sparsity_cap) {
    if (engine.residue_small(config.residue_stop)) {
      return engine.finish(StopReason::ResidueSmall);
    }
    if (config.max_groups &&
        static_cast<int>(engine.result().groups.size()) >=
            *config.max_groups) {
      return engine.finish(StopReason::MaxGroups);
    }

    const Cell seed = engine.seed_scan();
    if (seed.row < 0) return engine.finish(StopReason::ResidueSmall);
    engine.commit(seed.row, seed.col);

    GroupRecord group;
    group.seed_row = seed.row;
    group.seed_col = seed.col;

    // Vertical phase inside the seed column, as in the SMV algorithm.
    for (int direction : {-1, +1}) {
      int steps = 1;
      while (true) {
        if (engine.support_size() >= sparsity_cap) break;
        const int candidate = seed.row + direction * steps;
        if (candidate < 0 || candidate >= engine.rows()) break;
        if (engine.is_selected(candidate, seed.col)) break;
        const double drop = engine.candidate_drop(candidate, seed.col);
        if (!(drop > vertical_eps())) break;
        engine.commit(candidate, seed.col);
        ++steps;
      }
      (direction < 0 ? group.k_up : group.k_down) = steps;
    }

    // Horizontal phase: the row range found in the seed column is frozen
    // and tested one whole block per neighboring column.
    std::vector<int> block_rows;
    for (int row = seed.row - (group.k_up - 1);
         row <= seed.row + (group.k_down - 1); ++row) {
      block_rows.push_back(row);
    }

    for (int direction : {-1, +1}) {
      int steps = 1;
      while (true) {
        const int column = seed.col + direction * steps;
        if (column < 0 || column >= engine.cols()) break;
        if (engine.support_size() +
                static_cast<int>(block_rows.size()) >
            sparsity_cap) {
          break;  // a block is admitted only if it fits within K
        }
        // Threshold against the pre-block residue, as in the vertical scans.
        const double epsilon_prime = horizontal_eps();
        auto tentative = engine.try_block(block_rows, column);
        if (tentative.pushed_rows.empty() ||
            !(tentative.drop > epsilon_prime)) {
          engine.rollback_block(tentative);
          break;
        }
        engine.commit_block(tentative);
        ++steps;
      }
      (direction < 0 ? group.k_left : group.k_right) = steps;
    }

    for (int col = seed.col - (group.k_left - 1);
         col <= seed.col + (group.k_right - 1); ++col) {
      for (int row : block_rows) {
        group.members_2d.push_back({row, col});
      }
    }
    engine.result().groups.push_back(std::move(group));
  }
  return engine.finish(StopReason::SparsityReached);
}

}  // namespace lampcs
