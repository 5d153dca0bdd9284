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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lampcs/metrics.hpp"
#include "lampcs/recovery.hpp"
#include "lampcs/signal_gen.hpp"

namespace lampcs {

enum class ExperimentKind {
  ExactRecoverySweep,
  RrVsBomp,
  MseSweep,
  BscanDemo,
  Diagram,
};

ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

/// One algorithm entry of an experiment. `label` names the CSV rows and
/// defaults to the algorithm name (bomp gets a "-d<block>" suffix so block
/// sizes can be swept side by side).
struct AlgorithmSpec {
  std::string name;   // omp | ols | bomp | lamp | lamp-mmv
  std::string label;  // defaulted in finalize()
  EpsilonMode eps_mode = EpsilonMode::RelativeToResidue;
  double eps = 0.01;
  std::optional<double> eps_prime;
  int block_size = 1;  // bomp
  std::optional<int> stop_blocks;
  BlockNorm block_norm = BlockNorm::L1;
  std::optional<int> max_groups;
  int merge_gap = 0;
  std::optional<double> residue_stop;
  std::optional<int> sparsity;  // overrides the experiment-level K
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::ExactRecoverySweep;
  int n = 400;
  int k = 50;
  int p = 1;
  std::vector<int> m_list;
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::string out_dir;

  PulseKind signal_kind = PulseKind::GaussianMonocycle;
  int signal_length = 50;
  int signal_start = 175;
  double signal_amplitude = 1.0;

  enum class DelayMode { None, Random, Fixed };
  DelayMode delay_mode = DelayMode::None;
  int delay_value = 0;

  std::vector<AlgorithmSpec> algorithms;
  std::vector<BScanTarget> targets;    // bscan-demo
  std::vector<double> rr_levels;       // diagram
  double noise_level = 0.0;            // measurement noise std, relative to |y|

  void validate() const;  // throws ConfigError
};

/// Parses the flat "key = value" config text with repeated
/// "algorithm { ... }" and "target { ... }" blocks. '#' starts a comment.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);

/// Runs the Monte-Carlo sweep described by the config and writes
/// trials.csv, summary.txt and (for diagram runs) diagram.csv into
/// config.out_dir. Trial t of sweep point M draws its matrix and delay from
/// sub-streams keyed by (master_seed, M, t), so every algorithm inside a
/// trial sees the identical (A, y) pair and extending the trial count never
/// changes earlier trials. Rows are sorted by (M, trial, label); reruns are
/// byte-identical except the runtime_us column.
void run_experiment(const ExperimentConfig& config);

/// Runs the synthetic B-scan pipeline: writes truth, measurements and the
/// reconstructions before merging, after merging and after band-limit
/// filtering as DMAT files plus a metrics summary.
void run_bscan_demo(const ExperimentConfig& config);

// trials.csv column order: m,trial,algorithm,rr,exact,mse,seed_searches,runtime_us
void write_trials_csv(std::ostream& out,
                      const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_trials_csv(std::istream& in);

// diagram.csv column order: m,s,level_percent
void write_diagram_csv(std::ostream& out,
                       const std::vector<DiagramCell>& cells);

/// Per (M, algorithm) aggregate lines recomputable from trials.csv alone.
/// Runtime is deliberately excluded so the summary is deterministic.
std::string summarize_trials(const std::vector<TrialRecord>& records);

}  // namespace lampcs
