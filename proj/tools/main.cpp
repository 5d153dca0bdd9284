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

// lampcs command-line front end.
//
// Subcommands: gen-matrix, gen-signal, sense, recover, experiment, bscan,
// report. Exit codes: 0 success, 2 config/usage error, 3 numerical failure,
// 4 I/O error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lampcs/dmat_io.hpp"
#include "lampcs/errors.hpp"
#include "lampcs/experiment.hpp"
#include "lampcs/metrics.hpp"
#include "lampcs/recovery.hpp"
#include "lampcs/sensing.hpp"
#include "lampcs/signal_gen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::uint64_t master_seed_or_env(std::uint64_t seed) {
  if (const char* env = std::getenv("LAMP_CS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return seed;
}

struct GenMatrixArgs {
  int rows = 0;
  int cols = 0;
  std::string ensemble = "gaussian";
  std::uint64_t seed = 0;
  bool normalize = false;
  std::string out;
};

int run_gen_matrix(const GenMatrixArgs& args) {
  lampcs::SensingMatrix a = lampcs::gen_sensing(
      args.rows, args.cols, lampcs::parse_ensemble(args.ensemble), args.seed);
  if (args.normalize) a = lampcs::normalize_columns(a);
  lampcs::write_dmat(args.out, a.matrix);
  return kExitOk;
}

struct GenSignalArgs {
  int n = 0;
  std::string kind = "monocycle";
  int start = 0;
  int length = 0;
  double amplitude = 1.0;
  int delay = 0;
  std::string out;
  std::string support_out;
};

int run_gen_signal(const GenSignalArgs& args) {
  const lampcs::PulseKind kind = lampcs::parse_pulse_kind(args.kind);
  lampcs::GroupSparseSignal signal =
      kind == lampcs::PulseKind::GaussianMonocycle
          ? lampcs::gaussian_monocycle(args.n, args.start, args.length,
                                       args.amplitude)
          : lampcs::gaussian_pulse(args.n, args.start, args.length,
                                   args.amplitude);
  if (args.delay != 0) signal = lampcs::apply_delay(signal, args.delay);
  lampcs::write_dmat(args.out, signal.values);
  if (!args.support_out.empty()) {
    std::ofstream out(args.support_out);
    if (!out) throw lampcs::IoError("cannot open " + args.support_out);
    lampcs::write_support(out, signal.true_support);
  }
  return kExitOk;
}

struct SenseArgs {
  std::string matrix;
  std::string signal;
  std::string out;
};

int run_sense(const SenseArgs& args) {
  const Eigen::MatrixXd a = lampcs::read_dmat(args.matrix);
  const Eigen::MatrixXd x = lampcs::read_dmat(args.signal);
  if (a.cols() != x.rows()) {
    throw lampcs::ShapeMismatchError("sense: A columns must match X rows");
  }
  lampcs::write_dmat(args.out, a * x);
  return kExitOk;
}

struct RecoverArgs {
  std::string algorithm = "omp";
  std::string matrix;
  std::string measurements;
  int sparsity = 0;
  std::string eps_mode = "relative";
  double eps = 0.01;
  std::optional<double> eps_prime;
  int block_size = 1;
  std::optional<int> stop_blocks;
  std::string block_norm = "l1";
  std::optional<int> max_groups;
  int merge_gap = 0;
  std::optional<double> residue_stop;
  std::string xhat_out;
  std::string report_out;
};

int run_recover(const RecoverArgs& args) {
  lampcs::SensingMatrix a;
  a.matrix = lampcs::read_dmat(args.matrix);
  a = lampcs::normalize_columns(a);
  const Eigen::MatrixXd y = lampcs::read_dmat(args.measurements);

  lampcs::RecoveryResult result;
  if (args.algorithm == "lamp-mmv") {
    lampcs::LampConfig config;
    config.sparsity = args.sparsity;
    config.epsilon_mode = lampcs::parse_epsilon_mode(args.eps_mode);
    config.epsilon = args.eps;
    config.epsilon_prime = args.eps_prime;
    config.max_groups = args.max_groups;
    config.merge_gap = args.merge_gap;
    config.residue_stop = args.residue_stop;
    result = lampcs::lamp_mmv(a, y, config);
  } else {
    if (y.cols() != 1) {
      throw lampcs::ConfigError(
          "recover: single-vector algorithms need a one-column measurement");
    }
    const Eigen::VectorXd y_vec = y.col(0);
    if (args.algorithm == "omp") {
      result = lampcs::omp(a, y_vec, args.sparsity, args.residue_stop);
    } else if (args.algorithm == "ols") {
      result = lampcs::ols(a, y_vec, args.sparsity, args.residue_stop);
    } else if (args.algorithm == "bomp") {
      const int blocks = args.stop_blocks.value_or(
          (args.sparsity + args.block_size - 1) / args.block_size);
      result = lampcs::bomp(a, y_vec, args.block_size, blocks,
                            args.block_norm == "l2" ? lampcs::BlockNorm::L2
                                                    : lampcs::BlockNorm::L1,
                            args.residue_stop);
    } else if (args.algorithm == "lamp") {
      lampcs::LampConfig config;
      config.sparsity = args.sparsity;
      config.epsilon_mode = lampcs::parse_epsilon_mode(args.eps_mode);
      config.epsilon = args.eps;
      config.max_groups = args.max_groups;
      config.merge_gap = args.merge_gap;
      config.residue_stop = args.residue_stop;
      result = lampcs::lamp_smv(a, y_vec, config);
    } else {
      throw lampcs::ConfigError("unknown algorithm: " + args.algorithm);
    }
  }

  const std::string report = result.report();
  std::cout << report;
  if (!args.report_out.empty()) {
    std::ofstream out(args.report_out);
    if (!out) throw lampcs::IoError("cannot open " + args.report_out);
    out << report;
  }
  if (!args.xhat_out.empty()) {
    if (result.mmv) {
      lampcs::write_dmat(args.xhat_out,
                         lampcs::reconstruct_coeffs(a, result.support_2d, y));
    } else {
      lampcs::write_dmat(
          args.xhat_out,
          lampcs::reconstruct_coeffs(a, result.support, y.col(0)));
    }
  }
  return kExitOk;
}

struct ReportArgs {
  std::string trials;
  std::string levels;
  std::string diagram_out;
};

int run_report(const ReportArgs& args) {
  std::ifstream in(args.trials);
  if (!in) throw lampcs::IoError("cannot open " + args.trials);
  const std::vector<lampcs::TrialRecord> records =
      lampcs::read_trials_csv(in);
  std::cout << lampcs::summarize_trials(records);
  if (!args.diagram_out.empty()) {
    std::vector<double> levels = lampcs::default_rr_levels();
    if (!args.levels.empty()) {
      levels.clear();
      std::istringstream list(args.levels);
      std::string item;
      while (std::getline(list, item, ',')) {
        levels.push_back(std::stod(item));
      }
    }
    std::ofstream out(args.diagram_out);
    if (!out) throw lampcs::IoError("cannot open " + args.diagram_out);
    lampcs::write_diagram_csv(out, lampcs::recovery_diagram(records, levels));
  }
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Group-sparse compressive-sensing recovery toolkit"};
  app.require_subcommand(1);

  GenMatrixArgs gen_matrix_args;
  auto* gen_matrix = app.add_subcommand("gen-matrix",
                                        "Generate a random sensing matrix");
  gen_matrix->add_option("--rows", gen_matrix_args.rows)->required();
  gen_matrix->add_option("--cols", gen_matrix_args.cols)->required();
  gen_matrix->add_option("--ensemble", gen_matrix_args.ensemble)
      ->check(CLI::IsMember({"gaussian", "bernoulli"}));
  gen_matrix->add_option("--seed", gen_matrix_args.seed);
  gen_matrix->add_flag("--normalize", gen_matrix_args.normalize);
  gen_matrix->add_option("--out", gen_matrix_args.out)->required();

  GenSignalArgs gen_signal_args;
  auto* gen_signal =
      app.add_subcommand("gen-signal", "Generate a group-sparse test signal");
  gen_signal->add_option("--n", gen_signal_args.n)->required();
  gen_signal->add_option("--kind", gen_signal_args.kind)
      ->check(CLI::IsMember({"monocycle", "pulse"}));
  gen_signal->add_option("--start", gen_signal_args.start)->required();
  gen_signal->add_option("--length", gen_signal_args.length)->required();
  gen_signal->add_option("--amplitude", gen_signal_args.amplitude);
  gen_signal->add_option("--delay", gen_signal_args.delay);
  gen_signal->add_option("--out", gen_signal_args.out)->required();
  gen_signal->add_option("--support-out", gen_signal_args.support_out);

  SenseArgs sense_args;
  auto* sense = app.add_subcommand("sense", "Compute measurements Y = A * X");
  sense->add_option("--matrix", sense_args.matrix)->required();
  sense->add_option("--signal", sense_args.signal)->required();
  sense->add_option("--out", sense_args.out)->required();

  RecoverArgs recover_args;
  auto* recover =
      app.add_subcommand("recover", "Run one recovery on stored data");
  recover->add_option("--algorithm", recover_args.algorithm)
      ->check(CLI::IsMember({"omp", "ols", "bomp", "lamp", "lamp-mmv"}));
  recover->add_option("--matrix", recover_args.matrix)->required();
  recover->add_option("--measurements", recover_args.measurements)
      ->required();
  recover->add_option("--sparsity", recover_args.sparsity)->required();
  recover->add_option("--eps-mode", recover_args.eps_mode)
      ->check(CLI::IsMember({"absolute", "relative", "oracle"}));
  recover->add_option("--eps", recover_args.eps);
  recover->add_option("--eps-prime",
                      [&recover_args](const CLI::results_t& values) {
                        recover_args.eps_prime = std::stod(values[0]);
                        return true;
                      },
                      "Horizontal threshold (MMV)");
  recover->add_option("--block-size", recover_args.block_size);
  recover->add_option("--stop-blocks",
                      [&recover_args](const CLI::results_t& values) {
                        recover_args.stop_blocks = std::stoi(values[0]);
                        return true;
                      },
                      "Number of blocks to select (BOMP)");
  recover->add_option("--block-norm", recover_args.block_norm)
      ->check(CLI::IsMember({"l1", "l2"}));
  recover->add_option("--max-groups",
                      [&recover_args](const CLI::results_t& values) {
                        recover_args.max_groups = std::stoi(values[0]);
                        return true;
                      },
                      "Stop after this many groups (LAMP)");
  recover->add_option("--merge-gap", recover_args.merge_gap);
  recover->add_option("--residue-stop",
                      [&recover_args](const CLI::results_t& values) {
                        recover_args.residue_stop = std::stod(values[0]);
                        return true;
                      },
                      "Relative residue stop threshold");
  recover->add_option("--xhat-out", recover_args.xhat_out);
  recover->add_option("--report-out", recover_args.report_out);

  std::string experiment_config;
  std::string experiment_out_override;
  auto* experiment = app.add_subcommand(
      "experiment", "Run a config-driven Monte-Carlo sweep");
  experiment->add_option("--config", experiment_config)->required();
  experiment->add_option("--out", experiment_out_override);

  std::string bscan_config;
  std::string bscan_out_override;
  auto* bscan =
      app.add_subcommand("bscan", "Run the synthetic B-scan demo pipeline");
  bscan->add_option("--config", bscan_config)->required();
  bscan->add_option("--out", bscan_out_override);

  ReportArgs report_args;
  auto* report = app.add_subcommand(
      "report", "Recompute summaries (and optionally a diagram) from trials.csv");
  report->add_option("--trials", report_args.trials)->required();
  report->add_option("--levels", report_args.levels);
  report->add_option("--diagram-out", report_args.diagram_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (gen_matrix->parsed()) return run_gen_matrix(gen_matrix_args);
  if (gen_signal->parsed()) return run_gen_signal(gen_signal_args);
  if (sense->parsed()) return run_sense(sense_args);
  if (recover->parsed()) return run_recover(recover_args);
  if (experiment->parsed() || bscan->parsed()) {
    const std::string& path =
        experiment->parsed() ? experiment_config : bscan_config;
    lampcs::ExperimentConfig config = lampcs::load_experiment_config(path);
    config.master_seed = master_seed_or_env(config.master_seed);
    const std::string& override_dir =
        experiment->parsed() ? experiment_out_override : bscan_out_override;
    if (!override_dir.empty()) config.out_dir = override_dir;
    if (bscan->parsed() || config.kind == lampcs::ExperimentKind::BscanDemo) {
      lampcs::run_bscan_demo(config);
    } else {
      lampcs::run_experiment(config);
    }
    return kExitOk;
  }
  if (report->parsed()) return run_report(report_args);
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const lampcs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lampcs::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const lampcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
