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

#include "lampcs/metrics.hpp"

#include <algorithm>
#include <map>

#include "lampcs/errors.hpp"

namespace lampcs {

namespace {

template <typename Set>
std::size_t intersection_size(const Set& a, const Set& b) {
  Set sa = sorted_copy(a);
  Set sb = sorted_copy(b);
  Set common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(common));
  return common.size();
}

template <typename Set>
double relative_recovery_impl(const Set& true_support, const Set& estimated) {
  if (true_support.empty()) {
    throw EmptyTrueSupportError("relative_recovery: empty true support");
  }
  return static_cast<double>(intersection_size(true_support, estimated)) /
         static_cast<double>(true_support.size());
}

template <typename Set>
bool exact_recovery_impl(const Set& true_support, const Set& estimated,
                         ExactMode mode) {
  const std::size_t common = intersection_size(true_support, estimated);
  if (common < true_support.size()) return false;
  return mode == ExactMode::Superset ||
         estimated.size() == true_support.size();
}

}  // namespace

double relative_recovery(const SupportSet& true_support,
                         const SupportSet& estimated) {
  return relative_recovery_impl(true_support, estimated);
}

double relative_recovery(const SupportSet2D& true_support,
                         const SupportSet2D& estimated) {
  return relative_recovery_impl(true_support, estimated);
}

double mse(const Eigen::VectorXd& x, const Eigen::VectorXd& x_hat) {
  if (x.size() != x_hat.size()) {
    throw ShapeMismatchError("mse: length mismatch");
  }
  if (x.size() == 0) throw ShapeMismatchError("mse: empty input");
  return (x - x_hat).squaredNorm() / static_cast<double>(x.size());
}

double mse(const Eigen::MatrixXd& x, const Eigen::MatrixXd& x_hat) {
  if (x.rows() != x_hat.rows() || x.cols() != x_hat.cols()) {
    throw ShapeMismatchError("mse: shape mismatch");
  }
  if (x.size() == 0) throw ShapeMismatchError("mse: empty input");
  return (x - x_hat).squaredNorm() / static_cast<double>(x.size());
}

bool exact_recovery(const SupportSet& true_support,
                    const SupportSet& estimated, ExactMode mode) {
  return exact_recovery_impl(true_support, estimated, mode);
}

bool exact_recovery(const SupportSet2D& true_support,
                    const SupportSet2D& estimated, ExactMode mode) {
  return exact_recovery_impl(true_support, estimated, mode);
}

std::vector<double> default_rr_levels() { return {1.0, 0.9, 0.7, 0.5}; }

std::vector<DiagramCell> recovery_diagram(
    const std::vector<TrialRecord>& records,
    const std::vector<double>& rr_levels) {
  std::map<int, std::vector<double>> rr_by_m;
  for (const TrialRecord& record : records) {
    rr_by_m[record.m].push_back(record.rr);
  }
  if (rr_by_m.empty()) return {};

  const std::size_t trials = rr_by_m.begin()->second.size();
  for (const auto& [m, rrs] : rr_by_m) {
    if (rrs.size() != trials) {
      throw InconsistentTrialCountsError(
          "recovery_diagram: sweep points carry different trial counts");
    }
  }

  std::vector<double> levels = rr_levels;
  std::sort(levels.begin(), levels.end(), std::greater<>());

  std::vector<DiagramCell> grid;
  for (const auto& [m, rrs] : rr_by_m) {
    // counts[i] = number of trials with rr >= levels[i]
    std::vector<int> counts(levels.size(), 0);
    for (double rr : rrs) {
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (rr >= levels[i]) ++counts[i];
      }
    }
    for (int s = 1; s <= static_cast<int>(trials); ++s) {
      double level = 0.0;  // floor level: always satisfied
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (counts[i] >= s) {
          level = levels[i];
          break;
        }
      }
      grid.push_back({m, s, 100.0 * level});
    }
  }
  return grid;
}

}  // namespace lampcs
