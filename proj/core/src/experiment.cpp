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

#include "lampcs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lampcs/dmat_io.hpp"
#include "lampcs/errors.hpp"
#include "lampcs/rng.hpp"

namespace lampcs {

namespace fs = std::filesystem;

ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "exact-recovery-sweep") return ExperimentKind::ExactRecoverySweep;
  if (name == "rr-vs-bomp") return ExperimentKind::RrVsBomp;
  if (name == "mse-sweep") return ExperimentKind::MseSweep;
  if (name == "bscan-demo") return ExperimentKind::BscanDemo;
  if (name == "diagram") return ExperimentKind::Diagram;
  throw ConfigError("unknown experiment kind: " + name);
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::ExactRecoverySweep:
      return "exact-recovery-sweep";
    case ExperimentKind::RrVsBomp:
      return "rr-vs-bomp";
    case ExperimentKind::MseSweep:
      return "mse-sweep";
    case ExperimentKind::BscanDemo:
      return "bscan-demo";
    case ExperimentKind::Diagram:
      return "diagram";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Config parsing: flat "key = value" lines plus "algorithm { ... }" and
// "target { ... }" blocks. '#' starts a comment.
// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool split_key_value(const std::string& line, std::string& key,
                     std::string& value) {
  const auto eq = line.find('=');
  if (eq == std::string::npos) return false;
  key = trim(line.substr(0, eq));
  value = trim(line.substr(eq + 1));
  return !key.empty();
}

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("bad number for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double parsed = parse_number(key, value);
  const int as_int = static_cast<int>(parsed);
  if (static_cast<double>(as_int) != parsed) {
    throw ConfigError("expected integer for '" + key + "': " + value);
  }
  return as_int;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void apply_algorithm_key(AlgorithmSpec& spec, const std::string& key,
                         const std::string& value) {
  if (key == "name") {
    spec.name = value;
  } else if (key == "label") {
    spec.label = value;
  } else if (key == "eps_mode") {
    spec.eps_mode = parse_epsilon_mode(value);
  } else if (key == "eps") {
    spec.eps = parse_number(key, value);
  } else if (key == "eps_prime") {
    spec.eps_prime = parse_number(key, value);
  } else if (key == "d" || key == "block_size") {
    spec.block_size = parse_int(key, value);
  } else if (key == "stop_blocks") {
    spec.stop_blocks = parse_int(key, value);
  } else if (key == "block_norm") {
    if (value == "l1") {
      spec.block_norm = BlockNorm::L1;
    } else if (value == "l2") {
      spec.block_norm = BlockNorm::L2;
    } else {
      throw ConfigError("bad block_norm: " + value);
    }
  } else if (key == "max_groups") {
    spec.max_groups = parse_int(key, value);
  } else if (key == "merge_gap") {
    spec.merge_gap = parse_int(key, value);
  } else if (key == "residue_stop") {
    spec.residue_stop = parse_number(key, value);
  } else if (key == "k" || key == "sparsity") {
    spec.sparsity = parse_int(key, value);
  } else {
    throw ConfigError("unknown algorithm key: " + key);
  }
}

void apply_target_key(BScanTarget& target, const std::string& key,
                      const std::string& value) {
  if (key == "row" || key == "apex_row") {
    target.apex_row = parse_int(key, value);
  } else if (key == "col" || key == "apex_col") {
    target.apex_col = parse_int(key, value);
  } else if (key == "spread") {
    target.spread = parse_number(key, value);
  } else if (key == "length") {
    target.length = parse_int(key, value);
  } else if (key == "amplitude") {
    target.amplitude = parse_number(key, value);
  } else if (key == "kind") {
    target.kind = parse_pulse_kind(value);
  } else {
    throw ConfigError("unknown target key: " + key);
  }
}

void apply_top_key(ExperimentConfig& config, const std::string& key,
                   const std::string& value) {
  if (key == "kind") {
    config.kind = parse_experiment_kind(value);
  } else if (key == "n") {
    config.n = parse_int(key, value);
  } else if (key == "k") {
    config.k = parse_int(key, value);
  } else if (key == "p") {
    config.p = parse_int(key, value);
  } else if (key == "m") {
    config.m_list.clear();
    for (const std::string& item : split_list(value)) {
      config.m_list.push_back(parse_int(key, item));
    }
  } else if (key == "trials") {
    config.trials = parse_int(key, value);
  } else if (key == "seed") {
    config.master_seed = static_cast<std::uint64_t>(
        std::strtoull(value.c_str(), nullptr, 10));
  } else if (key == "out") {
    config.out_dir = value;
  } else if (key == "signal_kind") {
    config.signal_kind = parse_pulse_kind(value);
  } else if (key == "signal_length") {
    config.signal_length = parse_int(key, value);
  } else if (key == "signal_start") {
    config.signal_start = parse_int(key, value);
  } else if (key == "signal_amplitude") {
    config.signal_amplitude = parse_number(key, value);
  } else if (key == "delay") {
    if (value == "none") {
      config.delay_mode = ExperimentConfig::DelayMode::None;
    } else if (value == "random") {
      config.delay_mode = ExperimentConfig::DelayMode::Random;
    } else {
      config.delay_mode = ExperimentConfig::DelayMode::Fixed;
      config.delay_value = parse_int(key, value);
    }
  } else if (key == "rr_levels") {
    config.rr_levels.clear();
    for (const std::string& item : split_list(value)) {
      config.rr_levels.push_back(parse_number(key, item));
    }
  } else if (key == "noise") {
    config.noise_level = parse_number(key, value);
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

void finalize_labels(ExperimentConfig& config) {
  for (AlgorithmSpec& spec : config.algorithms) {
    if (spec.label.empty()) {
      spec.label = spec.name == "bomp"
                       ? spec.name + "-d" + std::to_string(spec.block_size)
                       : spec.name;
    }
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  enum class Section { Top, Algorithm, Target } section = Section::Top;
  AlgorithmSpec algorithm;
  BScanTarget target;

  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = trim(strip_comment(line));
    if (line.empty()) continue;

    try {
      if (section == Section::Top) {
        if (line == "algorithm {") {
          section = Section::Algorithm;
          algorithm = AlgorithmSpec{};
        } else if (line == "target {") {
          section = Section::Target;
          target = BScanTarget{};
        } else {
          std::string key, value;
          if (!split_key_value(line, key, value)) {
            throw ConfigError("expected 'key = value'");
          }
          apply_top_key(config, key, value);
        }
      } else if (line == "}") {
        if (section == Section::Algorithm) {
          if (algorithm.name.empty()) {
            throw ConfigError("algorithm block without a name");
          }
          config.algorithms.push_back(algorithm);
        } else {
          config.targets.push_back(target);
        }
        section = Section::Top;
      } else {
        std::string key, value;
        if (!split_key_value(line, key, value)) {
          throw ConfigError("expected 'key = value'");
        }
        if (section == Section::Algorithm) {
          apply_algorithm_key(algorithm, key, value);
        } else {
          apply_target_key(target, key, value);
        }
      }
    } catch (const ConfigError& error) {
      throw ConfigError("line " + std::to_string(line_number) + ": " +
                        error.what());
    }
  }
  if (section != Section::Top) throw ConfigError("unterminated block");
  finalize_labels(config);
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  return parse_experiment_config(in);
}

void ExperimentConfig::validate() const {
  if (n < 1) throw ConfigError("config: n must be positive");
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (out_dir.empty()) throw ConfigError("config: out directory not set");
  if (kind == ExperimentKind::BscanDemo) {
    if (p < 1) throw ConfigError("config: p must be >= 1");
    if (m_list.size() != 1) {
      throw ConfigError("config: bscan-demo takes exactly one m value");
    }
  } else {
    if (m_list.empty()) throw ConfigError("config: no m values");
    if (algorithms.empty()) throw ConfigError("config: no algorithms");
  }
  for (int m : m_list) {
    if (m < 1 || m > n) throw ConfigError("config: need 1 <= m <= n");
  }
  static const std::vector<std::string> known = {"omp", "ols", "bomp", "lamp",
                                                 "lamp-mmv"};
  for (const AlgorithmSpec& spec : algorithms) {
    if (std::find(known.begin(), known.end(), spec.name) == known.end()) {
      throw ConfigError("config: unknown algorithm: " + spec.name);
    }
    if (spec.name == "lamp-mmv" && kind != ExperimentKind::BscanDemo) {
      throw ConfigError("config: lamp-mmv runs inside bscan-demo");
    }
  }
  if (kind == ExperimentKind::Diagram && algorithms.size() != 1) {
    throw ConfigError("config: diagram runs take exactly one algorithm");
  }
  if (noise_level < 0.0) throw ConfigError("config: noise must be >= 0");
}

// ---------------------------------------------------------------------------
// CSV and summary output.
// ---------------------------------------------------------------------------

void write_trials_csv(std::ostream& out,
                      const std::vector<TrialRecord>& records) {
  out << "m,trial,algorithm,rr,exact,mse,seed_searches,runtime_us\n";
  for (const TrialRecord& r : records) {
    out << r.m << ',' << r.trial << ',' << r.algorithm << ','
        << format_double(r.rr) << ',' << (r.exact ? 1 : 0) << ','
        << format_double(r.mse) << ',' << r.seed_searches << ','
        << r.runtime_us << '\n';
  }
  if (!out) throw IoError("write_trials_csv: stream failure");
}

std::vector<TrialRecord> read_trials_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "m,trial,algorithm,rr,exact,mse,seed_searches,runtime_us") {
    throw IoError("read_trials_csv: bad header");
  }
  std::vector<TrialRecord> records;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    TrialRecord record;
    try {
      std::getline(row, field, ',');
      record.m = std::stoi(field);
      std::getline(row, field, ',');
      record.trial = std::stoi(field);
      std::getline(row, record.algorithm, ',');
      std::getline(row, field, ',');
      record.rr = std::stod(field);
      std::getline(row, field, ',');
      record.exact = std::stoi(field) != 0;
      std::getline(row, field, ',');
      record.mse = std::stod(field);
      std::getline(row, field, ',');
      record.seed_searches = std::stoi(field);
      if (!std::getline(row, field, ',')) throw std::invalid_argument(line);
      record.runtime_us = std::stoll(field);
    } catch (const std::exception&) {
      throw IoError("read_trials_csv: bad row: " + line);
    }
    records.push_back(std::move(record));
  }
  return records;
}

void write_diagram_csv(std::ostream& out,
                       const std::vector<DiagramCell>& cells) {
  out << "m,s,level_percent\n";
  for (const DiagramCell& cell : cells) {
    out << cell.m << ',' << cell.s << ',' << format_double(cell.level_percent)
        << '\n';
  }
  if (!out) throw IoError("write_diagram_csv: stream failure");
}

std::string summarize_trials(const std::vector<TrialRecord>& records) {
  struct Bucket {
    int trials = 0;
    int exact = 0;
    int superset = 0;
    double rr_sum = 0.0;
    double mse_sum = 0.0;
    double searches_sum = 0.0;
  };
  std::map<std::pair<int, std::string>, Bucket> buckets;
  for (const TrialRecord& r : records) {
    Bucket& bucket = buckets[{r.m, r.algorithm}];
    ++bucket.trials;
    bucket.exact += r.exact ? 1 : 0;
    bucket.superset += r.rr >= 1.0 ? 1 : 0;
    bucket.rr_sum += r.rr;
    bucket.mse_sum += r.mse;
    bucket.searches_sum += r.seed_searches;
  }

  std::ostringstream out;
  out << "m algorithm trials exact_frac superset_frac mean_rr mean_mse "
         "mean_seed_searches\n";
  for (const auto& [key, bucket] : buckets) {
    const double trials = bucket.trials;
    out << key.first << ' ' << key.second << ' ' << bucket.trials << ' '
        << format_double(bucket.exact / trials) << ' '
        << format_double(bucket.superset / trials) << ' '
        << format_double(bucket.rr_sum / trials) << ' '
        << format_double(bucket.mse_sum / trials) << ' '
        << format_double(bucket.searches_sum / trials) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Sweep engine.
// ---------------------------------------------------------------------------

namespace {

GroupSparseSignal make_base_signal(const ExperimentConfig& config) {
  return config.signal_kind == PulseKind::GaussianMonocycle
             ? gaussian_monocycle(config.n, config.signal_start,
                                  config.signal_length,
                                  config.signal_amplitude)
             : gaussian_pulse(config.n, config.signal_start,
                              config.signal_length, config.signal_amplitude);
}

/// Seed-stream purposes; the numbering is frozen by the determinism tests.
enum StreamPurpose : std::uint64_t {
  kMatrixStream = 1,
  kDelayStream = 2,
  kNoiseStream = 3,
};

RecoveryResult run_algorithm(const AlgorithmSpec& spec,
                             const SensingMatrix& a, const Eigen::VectorXd& y,
                             const GroupSparseSignal& signal, int sparsity) {
  const int k = spec.sparsity.value_or(sparsity);
  if (spec.name == "omp") return omp(a, y, k, spec.residue_stop);
  if (spec.name == "ols") return ols(a, y, k, spec.residue_stop);
  if (spec.name == "bomp") {
    const int blocks =
        spec.stop_blocks.value_or((k + spec.block_size - 1) / spec.block_size);
    return bomp(a, y, spec.block_size, blocks, spec.block_norm,
                spec.residue_stop);
  }
  if (spec.name == "lamp") {
    LampConfig lamp_config;
    lamp_config.sparsity = k;
    lamp_config.epsilon_mode = spec.eps_mode;
    lamp_config.epsilon = spec.eps;
    lamp_config.epsilon_prime = spec.eps_prime;
    lamp_config.max_groups = spec.max_groups;
    lamp_config.merge_gap = spec.merge_gap;
    lamp_config.residue_stop = spec.residue_stop;
    if (spec.eps_mode == EpsilonMode::Oracle) {
      lamp_config.oracle_signal = signal.values;
    }
    return lamp_smv(a, y, lamp_config);
  }
  throw ConfigError("run_experiment: unsupported algorithm " + spec.name);
}

}  // namespace

void run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.kind == ExperimentKind::BscanDemo) {
    run_bscan_demo(config);
    return;
  }

  fs::create_directories(config.out_dir);
  const GroupSparseSignal base_signal = make_base_signal(config);

  std::vector<TrialRecord> records;
  std::vector<int> m_values = config.m_list;
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()),
                 m_values.end());

  for (int m : m_values) {
    for (int trial = 0; trial < config.trials; ++trial) {
      const auto m_key = static_cast<std::uint64_t>(m);
      const auto t_key = static_cast<std::uint64_t>(trial);
      const SensingMatrix a = normalize_columns(gen_sensing(
          m, config.n, Ensemble::Gaussian,
          mix_seed(config.master_seed, {m_key, t_key, kMatrixStream})));

      GroupSparseSignal signal = base_signal;
      if (config.delay_mode == ExperimentConfig::DelayMode::Random) {
        RngStream delay_rng(
            mix_seed(config.master_seed, {m_key, t_key, kDelayStream}));
        signal = apply_delay(base_signal, delay_rng);
      } else if (config.delay_mode == ExperimentConfig::DelayMode::Fixed) {
        signal = apply_delay(base_signal, config.delay_value);
      }

      Eigen::VectorXd y = a.matrix * signal.values;
      if (config.noise_level > 0.0) {
        RngStream noise_rng(
            mix_seed(config.master_seed, {m_key, t_key, kNoiseStream}));
        const double scale = config.noise_level * y.norm() / std::sqrt(m);
        for (int i = 0; i < m; ++i) y[i] += scale * noise_rng.next_gaussian();
      }

      for (const AlgorithmSpec& spec : config.algorithms) {
        const auto start = std::chrono::steady_clock::now();
        RecoveryResult result =
            run_algorithm(spec, a, y, signal, config.k);

        SupportSet estimate = result.support;
        if (spec.merge_gap > 0 && !result.groups.empty()) {
          estimate = merge_supports(result.groups, spec.merge_gap);
        }
        const Eigen::VectorXd x_hat = reconstruct_coeffs(a, estimate, y);
        const auto stop = std::chrono::steady_clock::now();

        TrialRecord record;
        record.m = m;
        record.trial = trial;
        record.algorithm = spec.label;
        record.rr = relative_recovery(signal.true_support, estimate);
        record.exact = exact_recovery(signal.true_support, estimate,
                                      ExactMode::SetEqual);
        record.mse = mse(signal.values, x_hat);
        record.seed_searches = result.seed_searches;
        record.runtime_us =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                .count();
        records.push_back(std::move(record));
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const TrialRecord& a, const TrialRecord& b) {
              return std::tie(a.m, a.trial, a.algorithm) <
                     std::tie(b.m, b.trial, b.algorithm);
            });

  {
    std::ofstream out(fs::path(config.out_dir) / "trials.csv");
    if (!out) throw IoError("run_experiment: cannot write trials.csv");
    write_trials_csv(out, records);
  }
  {
    std::ofstream out(fs::path(config.out_dir) / "summary.txt");
    if (!out) throw IoError("run_experiment: cannot write summary.txt");
    out << "kind " << to_string(config.kind) << '\n';
    out << summarize_trials(records);
  }
  if (config.kind == ExperimentKind::Diagram) {
    const std::vector<double> levels =
        config.rr_levels.empty() ? default_rr_levels() : config.rr_levels;
    std::ofstream out(fs::path(config.out_dir) / "diagram.csv");
    if (!out) throw IoError("run_experiment: cannot write diagram.csv");
    write_diagram_csv(out, recovery_diagram(records, levels));
  }
}

// ---------------------------------------------------------------------------
// B-scan demo pipeline.
// ---------------------------------------------------------------------------

namespace {

std::vector<BScanTarget> default_targets() {
  // Two vertically separated hyperbolic reflectors.
  return {
      {30, 8, 0.18, 14, 1.0, PulseKind::GaussianMonocycle},
      {80, 10, 0.25, 12, 0.8, PulseKind::GaussianMonocycle},
  };
}

}  // namespace

void run_bscan_demo(const ExperimentConfig& config) {
  config.validate();
  fs::create_directories(config.out_dir);

  const std::vector<BScanTarget> targets =
      config.targets.empty() && config.kind == ExperimentKind::BscanDemo
          ? default_targets()
          : config.targets;
  const BScan scene = synth_bscan(config.n, config.p, targets);
  const int m = config.m_list.front();

  const SensingMatrix a = normalize_columns(
      gen_sensing(m, config.n, Ensemble::Gaussian,
                  mix_seed(config.master_seed, {static_cast<std::uint64_t>(m),
                                                0, kMatrixStream})));
  const Eigen::MatrixXd y = a.matrix * scene.image;

  // LAMP-MMV settings: the first lamp/lamp-mmv algorithm block, or defaults.
  AlgorithmSpec spec;
  spec.name = "lamp-mmv";
  spec.eps = 0.01;
  spec.merge_gap = 2;
  spec.residue_stop = 0.02;
  for (const AlgorithmSpec& candidate : config.algorithms) {
    if (candidate.name == "lamp-mmv" || candidate.name == "lamp") {
      spec = candidate;
      break;
    }
  }

  LampConfig lamp_config;
  lamp_config.sparsity = spec.sparsity.value_or(config.k);
  lamp_config.epsilon_mode = spec.eps_mode;
  lamp_config.epsilon = spec.eps;
  lamp_config.epsilon_prime = spec.eps_prime;
  lamp_config.max_groups = spec.max_groups;
  lamp_config.merge_gap = spec.merge_gap;
  lamp_config.residue_stop = spec.residue_stop;
  if (spec.eps_mode == EpsilonMode::Oracle) {
    lamp_config.oracle_signal_mmv = scene.image;
  }

  const RecoveryResult result = lamp_mmv(a, y, lamp_config);

  const Eigen::MatrixXd x_pre = reconstruct_coeffs(a, result.support_2d, y);
  const SupportSet2D merged =
      merge_supports_2d(result.groups, std::max(spec.merge_gap, 0));
  const Eigen::MatrixXd x_merged = reconstruct_coeffs(a, merged, y);

  // Band from the transmitted pulse's spectral support (99.9% energy).
  Eigen::MatrixXd x_filtered = x_merged;
  if (!targets.empty()) {
    const GroupSparseSignal reference =
        targets.front().kind == PulseKind::GaussianMonocycle
            ? gaussian_monocycle(config.n, 0, targets.front().length, 1.0)
            : gaussian_pulse(config.n, 0, targets.front().length, 1.0);
    const auto [low, high] = spectral_band(reference.values, 0.999);
    for (int col = 0; col < x_filtered.cols(); ++col) {
      x_filtered.col(col) = bandlimit_filter(x_merged.col(col), low, high);
    }
  }

  write_dmat((fs::path(config.out_dir) / "scene.dmat").string(), scene.image);
  write_dmat((fs::path(config.out_dir) / "measurements.dmat").string(), y);
  write_dmat((fs::path(config.out_dir) / "xhat_premerge.dmat").string(),
             x_pre);
  write_dmat((fs::path(config.out_dir) / "xhat_merged.dmat").string(),
             x_merged);
  write_dmat((fs::path(config.out_dir) / "xhat_filtered.dmat").string(),
             x_filtered);

  std::ofstream summary(fs::path(config.out_dir) / "summary.txt");
  if (!summary) throw IoError("run_bscan_demo: cannot write summary.txt");
  summary << "kind bscan-demo\n";
  summary << "scene " << config.n << "x" << config.p << " targets "
          << targets.size() << '\n';
  summary << "measurements " << m << "x" << config.p << '\n';
  summary << "stop_reason " << to_string(result.stop_reason) << '\n';
  summary << "seed_searches " << result.seed_searches << '\n';
  if (scene.true_support_2d.empty()) {
    summary << "rr undefined (empty true support)\n";
  } else {
    summary << "rr_premerge "
            << format_double(relative_recovery(scene.true_support_2d,
                                               result.support_2d))
            << '\n';
    summary << "rr_merged "
            << format_double(relative_recovery(scene.true_support_2d, merged))
            << '\n';
  }
  summary << "mse_premerge " << format_double(mse(scene.image, x_pre)) << '\n';
  summary << "mse_merged " << format_double(mse(scene.image, x_merged))
          << '\n';
  summary << "mse_filtered " << format_double(mse(scene.image, x_filtered))
          << '\n';
}

}  // namespace lampcs
