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
#include <string>
#include <utility>
#include <vector>

#include "lampcs/rng.hpp"
#include "lampcs/types.hpp"

namespace lampcs {

enum class PulseKind { GaussianPulse, GaussianMonocycle };

PulseKind parse_pulse_kind(const std::string& name);
std::string to_string(PulseKind kind);

/// Sparse test vector whose nonzeros sit in contiguous clusters.
/// `true_support` always equals the exact nonzero index set of `values`,
/// and `groups` lists the maximal runs of consecutive nonzeros as
/// (start, length) pairs.
struct GroupSparseSignal {
  Eigen::VectorXd values;
  SupportSet true_support;
  std::vector<std::pair<int, int>> groups;
  // Generation metadata.
  PulseKind kind = PulseKind::GaussianMonocycle;
  int width = 0;
  int delay = 0;
};

/// Synthetic space-time image: column p holds the A-scan at antenna
/// position p.
struct BScan {
  Eigen::MatrixXd image;  // N x P
  SupportSet2D true_support_2d;
};

struct BScanTarget {
  int apex_row = 0;
  int apex_col = 0;
  double spread = 0.0;  // rows of extra delay per squared column offset
  int length = 0;
  double amplitude = 1.0;
  PulseKind kind = PulseKind::GaussianMonocycle;
};

// Pulse shapes. Both are sampled at `length` points over t in [-3s, 3s]
// with s = length/6, which keeps window-edge values below 1.2% of the peak:
//   pulse:     g(t) = amplitude * exp(-t^2 / (2 s^2))
//   monocycle: m(t) ~ -t * exp(-t^2 / (2 s^2)), rescaled so the largest
//              sample magnitude equals |amplitude|
// Samples whose magnitude falls below 1e-12 * |amplitude| are snapped to
// exact zero so the support contract stays crisp.

GroupSparseSignal gaussian_pulse(int n, int start, int length,
                                 double amplitude);

GroupSparseSignal gaussian_monocycle(int n, int start, int length,
                                     double amplitude);

/// Plain (non-circular) shift by `delay` samples; negative shifts move the
/// pulse toward index 0. Throws WindowOverflowError if the shifted support
/// would leave [0, N).
GroupSparseSignal apply_delay(const GroupSparseSignal& signal, int delay);

/// Shift by a uniformly drawn delay in {0, ..., N - 1 - last support
/// index}, so the shifted signal always fits.
GroupSparseSignal apply_delay(const GroupSparseSignal& signal,
                              RngStream& rng);

/// Builds an N x P B-scan. Each target places one pulse per column; the
/// pulse in column p starts at row
///   apex_row + round(spread * (p - apex_col)^2),
/// a discrete two-way-travel hyperbola. Overlapping contributions sum.
BScan synth_bscan(int n, int p, const std::vector<BScanTarget>& targets);

}  // namespace lampcs
