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

#include "lampcs/types.hpp"

namespace lampcs {

/// Least-squares coefficients c minimizing |y - a_sub * c|_2, solved with a
/// rank-revealing orthogonal factorization (never normal equations).
/// Throws RankDeficientError when the numerical rank is below the column
/// count, which signals an over-grown or duplicated support.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& a_sub,
                              const Eigen::VectorXd& y);

/// P_T^perp y, the residue of y against the columns of `a` indexed by
/// `support`. Returns y unchanged for an empty support. Idempotent:
/// projecting twice with the same support reproduces the result.
Eigen::VectorXd project_residue(const Eigen::MatrixXd& a,
                                const SupportSet& support,
                                const Eigen::VectorXd& y);

/// Squared-residue decrease from adding column `candidate` to `support`:
///   |residue(T)|^2 - |residue(T u {j})|^2 = <residue, b_j>^2
/// with b_j the normalized column j of P_T^perp A. `residue` must be the
/// current residue P_T^perp y. Returns 0 when column j already lies in the
/// span of A|_T (within the rank tolerance).
double residue_drop(const Eigen::MatrixXd& a, const SupportSet& support,
                    int candidate, const Eigen::VectorXd& residue);

/// Columns of `a` indexed by `support`, in the given order.
Eigen::MatrixXd submatrix_cols(const Eigen::MatrixXd& a,
                               const SupportSet& support);

}  // namespace lampcs
