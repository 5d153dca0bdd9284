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

#include "lampcs/signal_gen.hpp"

#include <cmath>

#include "lampcs/errors.hpp"

namespace lampcs {

PulseKind parse_pulse_kind(const std::string& name) {
  if (name == "pulse") return PulseKind::GaussianPulse;
  if (name == "monocycle") return PulseKind::GaussianMonocycle;
  throw ConfigError("unknown pulse kind: " + name);
}

std::string to_string(PulseKind kind) {
  return kind == PulseKind::GaussianPulse ? "pulse" : "monocycle";
}

namespace {

constexpr double kSnapFraction = 1e-12;

/// Pulse samples over t in [-3s, 3s], s = length/6, endpoints included.
Eigen::VectorXd pulse_samples(PulseKind kind, int length, double amplitude) {
  const double sigma = length / 6.0;
  const double t0 = -3.0 * sigma;
  const double dt = 6.0 * sigma / (length - 1);

  Eigen::VectorXd samples(length);
  for (int i = 0; i < length; ++i) {
    const double t = t0 + i * dt;
    const double bell = std::exp(-t * t / (2.0 * sigma * sigma));
    samples[i] = kind == PulseKind::GaussianPulse ? bell : -t * bell;
  }
  if (kind == PulseKind::GaussianPulse) {
    samples *= amplitude;
  } else {
    // Peak sample magnitude pinned to |amplitude|.
    const double peak = samples.cwiseAbs().maxCoeff();
    samples *= amplitude / peak;
  }
  for (int i = 0; i < length; ++i) {
    if (std::abs(samples[i]) < kSnapFraction * std::abs(amplitude)) {
      samples[i] = 0.0;
    }
  }
  return samples;
}

void recompute_support(GroupSparseSignal& signal) {
  signal.true_support.clear();
  signal.groups.clear();
  const int n = static_cast<int>(signal.values.size());
  int run_start = -1;
  for (int i = 0; i <= n; ++i) {
    const bool nonzero = i < n && signal.values[i] != 0.0;
    if (nonzero) {
      signal.true_support.push_back(i);
      if (run_start < 0) run_start = i;
    } else if (run_start >= 0) {
      signal.groups.emplace_back(run_start, i - run_start);
      run_start = -1;
    }
  }
}

GroupSparseSignal make_pulse(PulseKind kind, int n, int start, int length,
                             double amplitude) {
  if (length < 2) throw WindowOverflowError("pulse length must be >= 2");
  if (start < 0 || start + length > n) {
    throw WindowOverflowError("pulse window does not fit in the signal");
  }
  GroupSparseSignal signal;
  signal.values = Eigen::VectorXd::Zero(n);
  signal.values.segment(start, length) = pulse_samples(kind, length, amplitude);
  signal.kind = kind;
  signal.width = length;
  signal.delay = 0;
  recompute_support(signal);
  return signal;
}

}  // namespace

GroupSparseSignal gaussian_pulse(int n, int start, int length,
                                 double amplitude) {
  return make_pulse(PulseKind::GaussianPulse, n, start, length, amplitude);
}

GroupSparseSignal gaussian_monocycle(int n, int start, int length,
                                     double amplitude) {
  return make_pulse(PulseKind::GaussianMonocycle, n, start, length, amplitude);
}

GroupSparseSignal apply_delay(const GroupSparseSignal& signal, int delay) {
  const int n = static_cast<int>(signal.values.size());
  if (signal.true_support.empty() || delay == 0) {
    GroupSparseSignal copy = signal;
    copy.delay += delay;
    return copy;
  }
  const int first = signal.true_support.front();
  const int last = signal.true_support.back();
  if (first + delay < 0 || last + delay >= n) {
    throw WindowOverflowError("apply_delay: shifted support leaves [0, N)");
  }

  GroupSparseSignal shifted;
  shifted.values = Eigen::VectorXd::Zero(n);
  for (int index : signal.true_support) {
    shifted.values[index + delay] = signal.values[index];
  }
  shifted.kind = signal.kind;
  shifted.width = signal.width;
  shifted.delay = signal.delay + delay;
  recompute_support(shifted);
  return shifted;
}

GroupSparseSignal apply_delay(const GroupSparseSignal& signal,
                              RngStream& rng) {
  if (signal.true_support.empty()) return signal;
  const int n = static_cast<int>(signal.values.size());
  const int last = signal.true_support.back();
  const int delay =
      static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - last)));
  return apply_delay(signal, delay);
}

BScan synth_bscan(int n, int p, const std::vector<BScanTarget>& targets) {
  if (n < 1 || p < 1) throw ConfigError("synth_bscan: bad dimensions");
  BScan scan;
  scan.image = Eigen::MatrixXd::Zero(n, p);

  for (const BScanTarget& target : targets) {
    for (int col = 0; col < p; ++col) {
      const double offset = static_cast<double>(col - target.apex_col);
      const int start =
          target.apex_row +
          static_cast<int>(std::llround(target.spread * offset * offset));
      const GroupSparseSignal pulse = make_pulse(
          target.kind, n, start, target.length, target.amplitude);
      scan.image.col(col) += pulse.values;
    }
  }

  for (int col = 0; col < p; ++col) {
    for (int row = 0; row < n; ++row) {
      if (scan.image(row, col) != 0.0) {
        scan.true_support_2d.push_back({row, col});
      }
    }
  }
  return scan;
}

}  // namespace lampcs
