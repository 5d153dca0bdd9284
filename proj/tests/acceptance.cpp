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

// Acceptance suite. Runs every criterion (or a single one given as the
// first argument) and prints one PASS/FAIL line each. Exit code 0 only if
// every requested criterion passes.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "lampcs/experiment.hpp"
#include "lampcs/matrix_ops.hpp"
#include "lampcs/metrics.hpp"
#include "lampcs/recovery.hpp"
#include "lampcs/rng.hpp"
#include "lampcs/sensing.hpp"
#include "lampcs/signal_gen.hpp"
#include "test_helpers.hpp"

using namespace lampcs;
using lampcs::testing::full_path_residue;
using lampcs::testing::random_normalized;
using lampcs::testing::random_support;
using lampcs::testing::random_vector;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Frozen tuning for the Monte-Carlo criteria (chosen once against held-out
// seeds, then pinned here).
constexpr double kSmvLampEps = 0.025;     // relative mode, SMV sweeps
constexpr double kMmvLampEps = 2e-4;      // relative mode, MMV vertical
constexpr double kMmvLampEpsPrime = 1e-3; // relative mode, MMV horizontal

// --------------------------------------------------------------------------
// 1. Residue identities.
// --------------------------------------------------------------------------

bool criterion_1() {
  int eq20_failures = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    RngStream rng(910000 + seed);
    const SensingMatrix a = random_normalized(20, 40, 910000 + seed);
    const int support_size = static_cast<int>(rng.next_below(6));  // <= 5
    const SupportSet support = random_support(40, support_size, rng);
    const Eigen::VectorXd y = random_vector(20, rng);

    int candidate = static_cast<int>(rng.next_below(40));
    while (contains(support, candidate)) {
      candidate = static_cast<int>(rng.next_below(40));
    }

    const Eigen::VectorXd residue = project_residue(a.matrix, support, y);
    SupportSet augmented = support;
    augmented.push_back(candidate);
    const double explicit_diff =
        full_path_residue(a.matrix, support, y).squaredNorm() -
        full_path_residue(a.matrix, augmented, y).squaredNorm();
    const double drop = residue_drop(a.matrix, support, candidate, residue);
    if (lampcs::testing::rel_error(drop, explicit_diff,
                                   1e-5 * residue.squaredNorm()) > 1e-8) {
      ++eq20_failures;
    }
  }

  int hbar_failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RngStream rng(920000 + seed);
    const SensingMatrix a = random_normalized(20, 40, 920000 + seed);
    const SupportSet truth = random_support(40, 6, rng);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(40);
    for (int j : truth) x[j] = rng.next_gaussian() + 1.0;
    const Eigen::VectorXd y = a.matrix * x;
    const SupportSet support(truth.begin(), truth.begin() + 3);

    Eigen::MatrixXd q_t(20, 40);
    for (int j = 0; j < 40; ++j) {
      q_t.col(j) = full_path_residue(a.matrix, support, a.matrix.col(j));
    }
    Eigen::VectorXd x_tc = x;
    for (int j : support) x_tc[j] = 0.0;
    const Eigen::VectorXd h = q_t.transpose() * (q_t * x_tc);
    const Eigen::VectorXd lhs =
        a.matrix.transpose() * project_residue(a.matrix, support, y);
    if ((lhs - h).norm() > 1e-8 * h.norm()) ++hbar_failures;
  }

  std::cout << "  squared-drop identity failures: " << eq20_failures
            << "/1000, correlation identity failures: " << hbar_failures
            << "/200\n";
  return eq20_failures == 0 && hbar_failures == 0;
}

// --------------------------------------------------------------------------
// 2. Reduction equivalences.
// --------------------------------------------------------------------------

bool criterion_2() {
  int lamp_vs_omp = 0;
  int bomp_vs_omp = 0;
  int mmv_vs_smv = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RngStream rng(930000 + seed);
    const SensingMatrix a = random_normalized(30, 60, 930000 + seed);
    const int start = static_cast<int>(rng.next_below(52));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(60);
    for (int j = start; j < start + 6; ++j) x[j] = rng.next_gaussian() + 1.5;
    const Eigen::VectorXd y = a.matrix * x;

    const RecoveryResult via_omp = omp(a, y, 8);

    LampConfig as_omp;
    as_omp.sparsity = 8;
    as_omp.epsilon_mode = EpsilonMode::Absolute;
    as_omp.epsilon = kInf;
    if (lamp_smv(a, y, as_omp).support == via_omp.support) ++lamp_vs_omp;

    if (bomp(a, y, 1, 8).support == via_omp.support) ++bomp_vs_omp;

    LampConfig plain;
    plain.sparsity = 8;
    const RecoveryResult smv = lamp_smv(a, y, plain);
    const RecoveryResult mmv = lamp_mmv(a, y, plain);
    bool same = smv.support.size() == mmv.support_2d.size() &&
                smv.seed_searches == mmv.seed_searches;
    if (same) {
      for (std::size_t i = 0; i < smv.support.size(); ++i) {
        if (mmv.support_2d[i].row != smv.support[i] ||
            mmv.support_2d[i].col != 0) {
          same = false;
        }
      }
    }
    if (same) ++mmv_vs_smv;
  }
  std::cout << "  lamp(eps=inf)==omp: " << lamp_vs_omp
            << "/100, bomp(d=1)==omp: " << bomp_vs_omp
            << "/100, lamp-mmv(P=1)==lamp-smv: " << mmv_vs_smv << "/100\n";
  return lamp_vs_omp == 100 && bomp_vs_omp == 100 && mmv_vs_smv == 100;
}

// --------------------------------------------------------------------------
// 3. Desk-scale oracle equivalence.
// --------------------------------------------------------------------------

SupportSet best_subset_small(const SensingMatrix& a, const Eigen::VectorXd& y,
                             int max_size) {
  const int n = static_cast<int>(a.cols());
  const double target = 1e-9 * y.norm();
  SupportSet best;
  double best_norm = y.norm();
  // Sizes in increasing order so the smallest zero-residual support wins.
  for (int size = 1; size <= max_size; ++size) {
    SupportSet probe;
    const std::function<void(int)> visit = [&](int next) {
      if (static_cast<int>(probe.size()) == size) {
        const double norm = full_path_residue(a.matrix, probe, y).norm();
        if (norm < best_norm - target) {
          best_norm = norm;
          best = probe;
        }
        return;
      }
      for (int j = next; j < n; ++j) {
        probe.push_back(j);
        visit(j + 1);
        probe.pop_back();
      }
    };
    visit(0);
    if (best_norm <= target) break;
  }
  return best;
}

bool criterion_3() {
  int omp_exact = 0;
  int ols_exact = 0;
  int lamp_superset = 0;
  int guard_false_admissions = 0;
  const int instances = 200;
  for (std::uint64_t seed = 0; seed < instances; ++seed) {
    RngStream rng(940000 + seed);
    const SensingMatrix a = random_normalized(8, 12, 940000 + seed);
    const int k = 1 + static_cast<int>(rng.next_below(3));
    const int start = static_cast<int>(rng.next_below(12 - k + 1));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(12);
    for (int j = start; j < start + k; ++j) {
      double v = rng.next_gaussian();
      if (std::abs(v) < 0.5) v = v < 0 ? -0.5 : 0.5;
      x[j] = v;
    }
    const Eigen::VectorXd y = a.matrix * x;

    const SupportSet oracle = best_subset_small(a, y, 3);

    const RecoveryResult via_omp = omp(a, y, k);
    if (exact_recovery(oracle, via_omp.support, ExactMode::SetEqual)) {
      ++omp_exact;
    }
    const RecoveryResult via_ols = ols(a, y, k);
    if (exact_recovery(oracle, via_ols.support, ExactMode::SetEqual)) {
      ++ols_exact;
    }

    LampConfig config;
    config.sparsity = k;
    config.epsilon_mode = EpsilonMode::Oracle;
    config.oracle_signal = x;
    const RecoveryResult via_lamp = lamp_smv(a, y, config);
    if (exact_recovery(oracle, via_lamp.support, ExactMode::Superset)) {
      ++lamp_superset;
    }
    for (const GroupRecord& group : via_lamp.groups) {
      for (int member : group.members) {
        if (member != group.seed_row && x[member] == 0.0) {
          ++guard_false_admissions;
        }
      }
    }
  }
  std::cout << "  omp set-equal: " << omp_exact << "/200, ols set-equal: "
            << ols_exact << "/200, lamp superset: " << lamp_superset
            << "/200, guard false admissions: " << guard_false_admissions
            << '\n';
  return lamp_superset >= omp_exact && guard_false_admissions == 0;
}

// --------------------------------------------------------------------------
// 4. Exact-recovery ordering over the measurement sweep.
// --------------------------------------------------------------------------

bool criterion_4() {
  const GroupSparseSignal signal = gaussian_monocycle(400, 175, 50, 1.0);
  const std::vector<int> m_values = {100, 125, 150, 175, 200};
  const int trials = 100;

  bool ordered = true;
  int strictly_better_low = 0;
  for (int m : m_values) {
    int omp_exact = 0;
    int lamp_exact = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const SensingMatrix a = random_normalized(
          m, 400,
          mix_seed(4000, {static_cast<std::uint64_t>(m),
                          static_cast<std::uint64_t>(trial), 1}));
      const Eigen::VectorXd y = a.matrix * signal.values;

      const RecoveryResult via_omp = omp(a, y, 50);
      if (exact_recovery(signal.true_support, sorted_copy(via_omp.support),
                         ExactMode::SetEqual)) {
        ++omp_exact;
      }

      LampConfig config;
      config.sparsity = 50;
      config.epsilon_mode = EpsilonMode::RelativeToResidue;
      config.epsilon = kSmvLampEps;
      const RecoveryResult via_lamp = lamp_smv(a, y, config);
      if (exact_recovery(signal.true_support, sorted_copy(via_lamp.support),
                         ExactMode::Superset)) {
        ++lamp_exact;
      }
    }
    std::cout << "  M=" << m << ": omp " << omp_exact << "/100, lamp "
              << lamp_exact << "/100\n";
    if (lamp_exact < omp_exact) ordered = false;
    if (m <= 150 && lamp_exact > omp_exact) ++strictly_better_low;
  }
  std::cout << "  strictly better at " << strictly_better_low
            << " low-M points (need >= 2)\n";
  return ordered && strictly_better_low >= 2;
}

// --------------------------------------------------------------------------
// 5. Block-size robustness against BOMP.
// --------------------------------------------------------------------------

bool criterion_5() {
  const GroupSparseSignal base = gaussian_monocycle(400, 175, 50, 1.0);
  const int m = 200;
  const int trials = 100;
  const std::vector<int> block_sizes = {10, 50, 60};

  double lamp_rr_sum = 0.0;
  std::map<int, double> bomp_rr_sum;
  for (int trial = 0; trial < trials; ++trial) {
    const auto t_key = static_cast<std::uint64_t>(trial);
    const SensingMatrix a = random_normalized(
        m, 400, mix_seed(5000, {static_cast<std::uint64_t>(m), t_key, 1}));
    RngStream delay_rng(
        mix_seed(5000, {static_cast<std::uint64_t>(m), t_key, 2}));
    const GroupSparseSignal signal = apply_delay(base, delay_rng);
    const Eigen::VectorXd y = a.matrix * signal.values;

    LampConfig config;
    config.sparsity = 50;
    config.epsilon_mode = EpsilonMode::RelativeToResidue;
    config.epsilon = kSmvLampEps;
    const RecoveryResult via_lamp = lamp_smv(a, y, config);
    lamp_rr_sum += relative_recovery(signal.true_support, via_lamp.support);

    for (int d : block_sizes) {
      const int blocks = (50 + d - 1) / d;
      const RecoveryResult via_bomp = bomp(a, y, d, blocks);
      bomp_rr_sum[d] +=
          relative_recovery(signal.true_support, via_bomp.support);
    }
  }

  const double lamp_mean = lamp_rr_sum / trials;
  std::cout << "  lamp mean RR " << lamp_mean << '\n';
  bool wins = true;
  for (int d : block_sizes) {
    const double bomp_mean = bomp_rr_sum[d] / trials;
    std::cout << "  bomp d=" << d << " mean RR " << bomp_mean << '\n';
    if (!(lamp_mean > bomp_mean)) wins = false;
  }
  return wins;
}

// --------------------------------------------------------------------------
// 6. Greedy-search counters.
// --------------------------------------------------------------------------

bool criterion_6() {
  // SMV: three well-separated flat groups, K = 50 in total, M = 200.
  const SensingMatrix a = random_normalized(200, 250, 960001);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(250);
  for (int j = 20; j < 37; ++j) x[j] = 1.0;    // 17
  for (int j = 110; j < 127; ++j) x[j] = -1.0; // 17
  for (int j = 200; j < 216; ++j) x[j] = 1.0;  // 16
  const Eigen::VectorXd y = a.matrix * x;

  const RecoveryResult via_omp = omp(a, y, 50);

  LampConfig config;
  config.sparsity = 50;
  config.epsilon_mode = EpsilonMode::Oracle;
  config.oracle_signal = x;
  config.max_groups = 3;
  const RecoveryResult via_lamp = lamp_smv(a, y, config);

  std::cout << "  smv: lamp seed_searches " << via_lamp.seed_searches
            << " (want 3), omp " << via_omp.seed_searches << " (want 50)\n";
  const bool smv_ok =
      via_lamp.seed_searches == 3 && via_omp.seed_searches == 50 &&
      static_cast<int>(via_lamp.groups.size()) == via_lamp.seed_searches;

  // MMV: one 3x4 rectangle; per-entry OMP and column-wise BOMP(d=3) as the
  // comparison points.
  const int n = 200;
  const int p = 8;
  const SensingMatrix a2 = random_normalized(120, n, 960002);
  Eigen::MatrixXd scene = Eigen::MatrixXd::Zero(n, p);
  for (int row = 60; row < 63; ++row) {
    for (int col = 2; col < 6; ++col) scene(row, col) = 1.0;
  }
  const Eigen::MatrixXd y2 = a2.matrix * scene;

  LampConfig mmv_config;
  mmv_config.sparsity = 12;
  mmv_config.epsilon_mode = EpsilonMode::Oracle;
  mmv_config.oracle_signal_mmv = scene;
  mmv_config.oracle_delta = 0.15;  // tuned with knowledge of the scene
  const RecoveryResult via_mmv = lamp_mmv(a2, y2, mmv_config);

  int omp_searches = 0;
  int bomp_searches = 0;
  for (int col = 0; col < p; ++col) {
    int nonzeros = 0;
    for (int row = 0; row < n; ++row) {
      if (scene(row, col) != 0.0) ++nonzeros;
    }
    if (nonzeros == 0) continue;
    omp_searches += omp(a2, y2.col(col), nonzeros).seed_searches;
    bomp_searches += bomp(a2, y2.col(col), 3, (nonzeros + 2) / 3).seed_searches;
  }

  std::cout << "  mmv: lamp " << via_mmv.seed_searches
            << " (want 1), per-entry omp " << omp_searches
            << " (want 12), bomp(d=3) " << bomp_searches << " (want 4)\n";
  const bool mmv_ok = via_mmv.seed_searches == 1 && omp_searches == 12 &&
                      bomp_searches == 4;
  return smv_ok && mmv_ok;
}

// --------------------------------------------------------------------------
// 7. Band-limit filtering of support-exact reconstructions.
// --------------------------------------------------------------------------

bool criterion_7() {
  // The reference signal is a band-limited monocycle: alternating
  // projections shape the windowed pulse until it is exactly in-band and
  // concentrated on the window, so the band mask contracts the broadband
  // reconstruction error.
  const int instances = 50;
  const int n = 400;
  const int length = 120;
  int ordered = 0;
  int factor_ok = 0;
  double worst_factor = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < instances; ++seed) {
    RngStream rng(970000 + seed);
    const int start = 60 + static_cast<int>(rng.next_below(180));
    const GroupSparseSignal pulse = gaussian_monocycle(n, start, length, 1.0);
    const auto [low, high] = spectral_band(pulse.values, 0.999);
    Eigen::VectorXd shaped = pulse.values;
    for (int iteration = 0; iteration < 60; ++iteration) {
      shaped = bandlimit_filter(shaped, low, high);
      for (int i = 0; i < n; ++i) {
        if (i < start || i >= start + length) shaped[i] = 0.0;
      }
    }
    const Eigen::VectorXd truth = bandlimit_filter(shaped, low, high);

    const SensingMatrix a = random_normalized(200, n, 970000 + seed);
    Eigen::VectorXd y = a.matrix * truth;
    // Broadband measurement noise keeps the reconstruction error well
    // above the floating-point floor.
    const double noise = 1e-3 * y.norm() / std::sqrt(200.0);
    for (int i = 0; i < 200; ++i) y[i] += noise * rng.next_gaussian();

    const Eigen::VectorXd x_hat =
        reconstruct_coeffs(a, pulse.true_support, y);
    const Eigen::VectorXd filtered = bandlimit_filter(x_hat, low, high);

    const double before = mse(truth, x_hat);
    const double after = mse(truth, filtered);
    if (after <= before) ++ordered;
    const double factor = before / std::max(after, 1e-300);
    worst_factor = std::min(worst_factor, factor);
    if (factor >= 10.0) ++factor_ok;
  }
  std::cout << "  ordered " << ordered << "/50, factor>=10 " << factor_ok
            << "/50, worst factor " << worst_factor << '\n';
  return ordered == instances && factor_ok == instances;
}

// --------------------------------------------------------------------------
// 8. B-scan pipeline against the column-wise OMP baseline.
// --------------------------------------------------------------------------

bool criterion_8() {
  const int scenes = 50;
  const int n = 200;
  const int p = 18;
  const int m = 40;
  int wins = 0;
  double rr_floor = 1.0;
  for (std::uint64_t seed = 0; seed < scenes; ++seed) {
    RngStream rng(980000 + seed);
    std::vector<BScanTarget> targets(2);
    targets[0] = {25 + static_cast<int>(rng.next_below(20)),
                  5 + static_cast<int>(rng.next_below(8)),
                  0.12 + 0.1 * rng.next_double(), 14, 1.0,
                  PulseKind::GaussianMonocycle};
    targets[1] = {80 + static_cast<int>(rng.next_below(25)),
                  5 + static_cast<int>(rng.next_below(8)),
                  0.15 + 0.1 * rng.next_double(), 12, 0.8,
                  PulseKind::GaussianMonocycle};
    const BScan scene = synth_bscan(n, p, targets);
    const SensingMatrix a = random_normalized(m, n, 980000 + seed);
    const Eigen::MatrixXd y = a.matrix * scene.image;

    LampConfig config;
    config.sparsity = 0;
    config.epsilon_mode = EpsilonMode::RelativeToResidue;
    config.epsilon = kMmvLampEps;
    config.epsilon_prime = kMmvLampEpsPrime;
    config.residue_stop = 0.02;
    config.merge_gap = 2;
    const RecoveryResult result = lamp_mmv(a, y, config);
    const SupportSet2D merged = merge_supports_2d(result.groups, 2);
    const double rr = relative_recovery(scene.true_support_2d, merged);
    const Eigen::MatrixXd x_lamp = reconstruct_coeffs(a, merged, y);
    const double mse_lamp = mse(scene.image, x_lamp);

    // Column-wise OMP baseline with the same residue budget.
    Eigen::MatrixXd x_omp = Eigen::MatrixXd::Zero(n, p);
    for (int col = 0; col < p; ++col) {
      const RecoveryResult column = omp(a, y.col(col), m - 1, 0.02);
      x_omp.col(col) =
          reconstruct_coeffs(a, sorted_copy(column.support), y.col(col));
    }
    const double mse_omp = mse(scene.image, x_omp);

    rr_floor = std::min(rr_floor, rr);
    if (rr >= 0.9 && mse_lamp < mse_omp) ++wins;
  }
  std::cout << "  scenes with rr>=0.9 and mse win: " << wins
            << "/50 (need >= 40), worst rr " << rr_floor << '\n';
  return wins >= 40;
}

// --------------------------------------------------------------------------
// 9. Experiment determinism.
// --------------------------------------------------------------------------

std::string file_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string drop_runtime_column(const std::string& csv) {
  std::ostringstream out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    out << line.substr(0, line.rfind(',')) << '\n';
  }
  return out.str();
}

bool criterion_9() {
  namespace fs = std::filesystem;
  const char* text = R"(
kind = diagram
n = 64
k = 8
m = 24, 40
trials = 5
seed = 99
signal_kind = monocycle
signal_length = 8
signal_start = 20
delay = random
out = X
algorithm {
  name = lamp
  eps = 0.04
}
)";
  std::istringstream stream_a(text);
  ExperimentConfig config = parse_experiment_config(stream_a);
  const fs::path dir_a = fs::temp_directory_path() / "lampcs_acc9_a";
  const fs::path dir_b = fs::temp_directory_path() / "lampcs_acc9_b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);

  config.out_dir = dir_a.string();
  run_experiment(config);
  config.out_dir = dir_b.string();
  run_experiment(config);

  const bool trials_same =
      drop_runtime_column(file_text(dir_a / "trials.csv")) ==
      drop_runtime_column(file_text(dir_b / "trials.csv"));
  const bool diagram_same =
      file_text(dir_a / "diagram.csv") == file_text(dir_b / "diagram.csv");
  const bool summary_same =
      file_text(dir_a / "summary.txt") == file_text(dir_b / "summary.txt");
  std::cout << "  trials.csv (modulo runtime): "
            << (trials_same ? "identical" : "DIFFER") << ", diagram.csv: "
            << (diagram_same ? "identical" : "DIFFER") << ", summary.txt: "
            << (summary_same ? "identical" : "DIFFER") << '\n';
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  return trials_same && diagram_same && summary_same;
}

struct Criterion {
  int number;
  const char* description;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "residue identities (squared-drop and correlation forms)",
     criterion_1},
    {2, "reduction equivalences", criterion_2},
    {3, "desk-scale oracle equivalence", criterion_3},
    {4, "exact-recovery ordering over the measurement sweep", criterion_4},
    {5, "block-size robustness vs BOMP", criterion_5},
    {6, "greedy-search counters", criterion_6},
    {7, "band-limit filtering MSE reduction", criterion_7},
    {8, "b-scan pipeline vs column-wise OMP", criterion_8},
    {9, "experiment determinism", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  const int requested = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const Criterion& criterion : kCriteria) {
    if (requested != 0 && criterion.number != requested) continue;
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = criterion.run();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << '\n';
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion "
              << criterion.number << ": " << criterion.description << " ("
              << seconds << " s)\n";
    if (!passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
