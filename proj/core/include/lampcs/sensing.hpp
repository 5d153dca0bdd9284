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

namespace lampcs {

enum class Ensemble { Gaussian, Bernoulli };

Ensemble parse_ensemble(const std::string& name);
std::string to_string(Ensemble ensemble);

/// Random measurement operator with its generation metadata. In the
/// compressive regime rows < cols; square matrices are allowed for
/// diagnostic tests.
struct SensingMatrix {
  Eigen::MatrixXd matrix;
  Ensemble ensemble = Ensemble::Gaussian;
  bool normalized = false;
  std::uint64_t seed = 0;

  Eigen::Index rows() const { return matrix.rows(); }
  Eigen::Index cols() const { return matrix.cols(); }
};

/// Draws a rows x cols matrix with i.i.d. standard normal (Gaussian) or
/// equiprobable +-1 (Bernoulli) entries. Entries are drawn row by row, left
/// to right, from an RngStream seeded with `seed`, so a given
/// (rows, cols, ensemble, seed) tuple is bit-reproducible. Columns are not
/// yet normalized.
SensingMatrix gen_sensing(int rows, int cols, Ensemble ensemble,
                          std::uint64_t seed);

/// Scales every column to unit l2 norm. Throws ZeroColumnError if a column
/// is identically zero.
SensingMatrix normalize_columns(const SensingMatrix& a);

/// Mutual coherence: max over i != j of |<A_i, A_j>|, computed by the plain
/// pairwise scan. Requires a normalized matrix.
double coherence(const SensingMatrix& a);

}  // namespace lampcs
