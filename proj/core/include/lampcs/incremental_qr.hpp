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

#include "lampcs/errors.hpp"

namespace lampcs {

/// Incrementally grown QR factorization of a column subset A|_T.
///
/// Columns are appended one at a time with classical Gram-Schmidt plus one
/// full reorthogonalization pass, so the stored basis stays orthonormal to
/// machine precision and appending costs O(rows * size) instead of a full
/// refactorization. The greedy recovery loops lean on two facts:
///   - project_out(y) is the residue P_T^perp y, and
///   - the squared-residue drop from adding column a equals
///     <residue, a_perp / |a_perp|>^2 with a_perp = orthogonalize(a).
/// A from-scratch rebuild must agree with the incremental path to 1e-10;
/// the tests exercise both routes against each other.
class IncrementalQr {
 public:
  /// A column whose orthogonalized norm falls below kRankTol times its
  /// original norm counts as rank deficient.
  static constexpr double kRankTol = 1e-10;

  explicit IncrementalQr(Eigen::Index rows);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index size() const { return size_; }

  /// Orthonormal basis of the committed columns (rows x size view).
  Eigen::Ref<const Eigen::MatrixXd> basis() const {
    return q_.leftCols(size_);
  }

  /// Component of `col` orthogonal to the committed span (not normalized).
  Eigen::VectorXd orthogonalize(const Eigen::VectorXd& col) const;

  /// Appends a column. Throws RankDeficientError if the column lies
  /// (numerically) inside the current span or the factorization is full.
  void push_column(const Eigen::VectorXd& col);

  /// Rolls back to the first `size` committed columns.
  void truncate(Eigen::Index size);

  /// P_T^perp y: the component of y orthogonal to the committed span.
  Eigen::VectorXd project_out(const Eigen::VectorXd& y) const;

  /// Least-squares coefficients c minimizing |y - A|_T c|_2, in push order.
  Eigen::VectorXd solve(const Eigen::VectorXd& y) const;

 private:
  void reserve(Eigen::Index capacity);

  Eigen::Index rows_ = 0;
  Eigen::Index size_ = 0;
  Eigen::MatrixXd q_;  // rows_ x capacity; leading size_ columns orthonormal
  Eigen::MatrixXd r_;  // capacity x capacity; leading block upper triangular
};

}  // namespace lampcs
