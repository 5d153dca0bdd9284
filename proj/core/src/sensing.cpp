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

#include "lampcs/sensing.hpp"

#include <cmath>

#include "lampcs/errors.hpp"
#include "lampcs/rng.hpp"

namespace lampcs {

Ensemble parse_ensemble(const std::string& name) {
  if (name == "gaussian") return Ensemble::Gaussian;
  if (name == "bernoulli") return Ensemble::Bernoulli;
  throw ConfigError("unknown ensemble: " + name);
}

std::string to_string(Ensemble ensemble) {
  return ensemble == Ensemble::Gaussian ? "gaussian" : "bernoulli";
}

SensingMatrix gen_sensing(int rows, int cols, Ensemble ensemble,
                          std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw ConfigError("gen_sensing: dimensions must be positive");
  }
  SensingMatrix result;
  result.matrix.resize(rows, cols);
  result.ensemble = ensemble;
  result.normalized = false;
  result.seed = seed;

  RngStream rng(seed);
  // Row-major fill order, part of the reproducibility contract.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      result.matrix(i, j) = ensemble == Ensemble::Gaussian
                                ? rng.next_gaussian()
                                : rng.next_sign();
    }
  }
  return result;
}

SensingMatrix normalize_columns(const SensingMatrix& a) {
  SensingMatrix result = a;
  for (Eigen::Index j = 0; j < result.cols(); ++j) {
    const double norm = result.matrix.col(j).norm();
    if (norm == 0.0) {
      throw ZeroColumnError("normalize_columns: zero column");
    }
    result.matrix.col(j) /= norm;
  }
  result.normalized = true;
  return result;
}

double coherence(const SensingMatrix& a) {
  if (!a.normalized) {
    throw NotNormalizedError("coherence: matrix is not column-normalized");
  }
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a.matrix.col(i).dot(a.matrix.col(j))));
    }
  }
  return worst;
}

}  // namespace lampcs
