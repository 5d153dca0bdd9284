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

#include "lampcs/matrix_ops.hpp"

#include "lampcs/errors.hpp"
#include "lampcs/incremental_qr.hpp"

namespace lampcs {

namespace {

void check_support(const Eigen::MatrixXd& a, const SupportSet& support) {
  for (int index : support) {
    if (index < 0 || index >= a.cols()) {
      throw IndexOutOfRangeError("support index out of range");
    }
  }
}

IncrementalQr build_qr(const Eigen::MatrixXd& a, const SupportSet& support) {
  IncrementalQr qr(a.rows());
  for (int index : support) qr.push_column(a.col(index));
  return qr;
}

}  // namespace

Eigen::MatrixXd submatrix_cols(const Eigen::MatrixXd& a,
                               const SupportSet& support) {
  check_support(a, support);
  Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) {
    sub.col(static_cast<Eigen::Index>(i)) = a.col(support[i]);
  }
  return sub;
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& a_sub,
                              const Eigen::VectorXd& y) {
  if (a_sub.rows() != y.size()) {
    throw ShapeMismatchError("least_squares: row count mismatch");
  }
  if (a_sub.cols() == 0) return Eigen::VectorXd(0);
  if (a_sub.cols() > a_sub.rows()) {
    throw RankDeficientError("least_squares: more columns than rows");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a_sub);
  qr.setThreshold(IncrementalQr::kRankTol);
  if (qr.rank() < a_sub.cols()) {
    throw RankDeficientError("least_squares: numerically rank deficient");
  }
  return qr.solve(y);
}

Eigen::VectorXd project_residue(const Eigen::MatrixXd& a,
                                const SupportSet& support,
                                const Eigen::VectorXd& y) {
  if (a.rows() != y.size()) {
    throw ShapeMismatchError("project_residue: row count mismatch");
  }
  check_support(a, support);
  if (support.empty()) return y;
  return build_qr(a, support).project_out(y);
}

double residue_drop(const Eigen::MatrixXd& a, const SupportSet& support,
                    int candidate, const Eigen::VectorXd& residue) {
  if (candidate < 0 || candidate >= a.cols()) {
    throw IndexOutOfRangeError("residue_drop: candidate out of range");
  }
  if (a.rows() != residue.size()) {
    throw ShapeMismatchError("residue_drop: row count mismatch");
  }
  check_support(a, support);
  if (contains(support, candidate)) return 0.0;

  const IncrementalQr qr = build_qr(a, support);
  const Eigen::VectorXd orth = qr.orthogonalize(a.col(candidate));
  const double orth_norm = orth.norm();
  if (!(orth_norm > IncrementalQr::kRankTol * a.col(candidate).norm())) {
    return 0.0;  // candidate already inside span(A|_T)
  }
  const double projection = orth.dot(residue) / orth_norm;
  return projection * projection;
}

}  // namespace lampcs
