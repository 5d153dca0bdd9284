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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "lampcs/errors.hpp"
#include "lampcs/matrix_ops.hpp"
#include "lampcs/recovery.hpp"
#include "lampcs/signal_gen.hpp"
#include "test_helpers.hpp"

using namespace lampcs;
using lampcs::testing::full_path_residue;
using lampcs::testing::random_normalized;
using lampcs::testing::random_support;
using lampcs::testing::random_vector;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

LampConfig lamp_as_omp(int sparsity) {
  LampConfig config;
  config.sparsity = sparsity;
  config.epsilon_mode = EpsilonMode::Absolute;
  config.epsilon = kInf;
  return config;
}

/// Exhaustive best-subset search over supports of size <= max_size:
/// smallest support reaching (near-)zero residual, ties by smaller size
/// then lexicographic order.
SupportSet best_subset(const SensingMatrix& a, const Eigen::VectorXd& y,
                       int max_size) {
  const int n = static_cast<int>(a.cols());
  SupportSet best;
  double best_norm = y.norm();
  const auto consider = [&](const SupportSet& support) {
    const double norm = full_path_residue(a.matrix, support, y).norm();
    if (norm < best_norm - 1e-9 * y.norm()) {
      best_norm = norm;
      best = support;
    }
  };
  for (int i = 0; i < n && max_size >= 1; ++i) {
    consider({i});
    if (best_norm <= 1e-9 * y.norm()) return best;
  }
  for (int i = 0; i < n && max_size >= 2; ++i) {
    for (int j = i + 1; j < n; ++j) {
      consider({i, j});
      if (best_norm <= 1e-9 * y.norm()) return best;
    }
  }
  for (int i = 0; i < n && max_size >= 3; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        consider({i, j, k});
        if (best_norm <= 1e-9 * y.norm()) return best;
      }
    }
  }
  return best;
}

Eigen::VectorXd spikes(int n, const SupportSet& support, RngStream& rng) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int j : support) {
    double v = rng.next_gaussian();
    if (std::abs(v) < 0.3) v = v < 0 ? -0.3 : 0.3;  // keep spikes visible
    x[j] = v;
  }
  return x;
}

}  // namespace

TEST_CASE("omp on zero measurements stops immediately") {
  const SensingMatrix a = random_normalized(8, 16, 1);
  const RecoveryResult result = omp(a, Eigen::VectorXd::Zero(8), 4);
  CHECK(result.support.empty());
  CHECK(result.stop_reason == StopReason::ResidueSmall);
  CHECK(result.seed_searches == 0);
}

TEST_CASE("omp on orthonormal columns finds a single spike") {
  SensingMatrix a;
  a.matrix = Eigen::MatrixXd::Identity(8, 8);
  a.normalized = true;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
  x[5] = 2.5;
  const RecoveryResult result = omp(a, a.matrix * x, 1);
  CHECK(result.support == SupportSet{5});
  CHECK(result.iterations == 1);
  CHECK(result.residue_norms.back() <= 1e-12);
}

TEST_CASE("omp matches the exhaustive best-subset oracle") {
  int exact = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RngStream rng(500 + seed);
    const SensingMatrix a = random_normalized(20, 40, 500 + seed);
    const SupportSet truth = random_support(40, 3, rng);
    const Eigen::VectorXd x = spikes(40, truth, rng);
    const Eigen::VectorXd y = a.matrix * x;

    const SupportSet oracle = best_subset(a, y, 3);
    CHECK(oracle == truth);  // noiseless l0 optimum is the planted support

    const RecoveryResult result = omp(a, y, 3);
    if (sorted_copy(result.support) == oracle) ++exact;
  }
  CHECK(exact == 10);  // frozen: OMP is exact at this easy scale
}

TEST_CASE("omp rejects unnormalized matrices and oversized sparsity") {
  SensingMatrix raw = gen_sensing(8, 16, Ensemble::Gaussian, 2);
  CHECK_THROWS_AS(omp(raw, Eigen::VectorXd::Ones(8), 2), NotNormalizedError);
  const SensingMatrix a = normalize_columns(raw);
  CHECK_THROWS_AS(omp(a, Eigen::VectorXd::Ones(8), 9), ConfigError);
}

TEST_CASE("ols equals omp on orthonormal columns") {
  SensingMatrix a;
  a.matrix = Eigen::MatrixXd::Identity(10, 10);
  a.normalized = true;
  RngStream rng(31);
  const Eigen::VectorXd y = random_vector(10, rng);
  const RecoveryResult via_omp = omp(a, y, 4);
  const RecoveryResult via_ols = ols(a, y, 4);
  CHECK(via_omp.support == via_ols.support);
}

TEST_CASE("ols on zero measurements") {
  const SensingMatrix a = random_normalized(8, 16, 4);
  const RecoveryResult result = ols(a, Eigen::VectorXd::Zero(8), 3);
  CHECK(result.support.empty());
  CHECK(result.stop_reason == StopReason::ResidueSmall);
}

TEST_CASE("ols picks the argmax of explicit per-candidate drops") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RngStream rng(700 + seed);
    const SensingMatrix a = random_normalized(15, 30, 700 + seed);
    const Eigen::VectorXd y = random_vector(15, rng);

    const RecoveryResult result = ols(a, y, 5);
    SupportSet selected;
    for (int step = 0; step < 5; ++step) {
      // Oracle: residue drop of every candidate via two full projections.
      const double before =
          full_path_residue(a.matrix, selected, y).squaredNorm();
      int best = -1;
      double best_drop = -1.0;
      for (int j = 0; j < 30; ++j) {
        if (contains(selected, j)) continue;
        SupportSet grown = selected;
        grown.push_back(j);
        const double drop =
            before - full_path_residue(a.matrix, grown, y).squaredNorm();
        if (drop > best_drop) {
          best_drop = drop;
          best = j;
        }
      }
      CHECK(result.support[step] == best);
      selected.push_back(best);
    }
  }
}

TEST_CASE("bomp with unit blocks reduces to omp") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RngStream rng(800 + seed);
    const SensingMatrix a = random_normalized(20, 40, 800 + seed);
    const SupportSet truth = random_support(40, 4, rng);
    const Eigen::VectorXd y = a.matrix * spikes(40, truth, rng);
    const RecoveryResult via_omp = omp(a, y, 6);
    const RecoveryResult via_bomp = bomp(a, y, 1, 6);
    CHECK(via_omp.support == via_bomp.support);
    CHECK(via_bomp.seed_searches == static_cast<int>(via_bomp.support.size()));
  }
}

TEST_CASE("bomp single full-width block selects everything") {
  // d = N needs N <= M for the block to stay full rank.
  const SensingMatrix a = random_normalized(30, 20, 9);
  RngStream rng(9);
  const Eigen::VectorXd y = a.matrix * random_vector(20, rng);
  const RecoveryResult result = bomp(a, y, 20, 1);
  CHECK(result.support.size() == 20);
  CHECK(result.seed_searches == 1);
}

TEST_CASE("bomp favors the block aligned with the group") {
  // Monocycle exactly filling block 3 of size 50.
  const GroupSparseSignal signal = gaussian_monocycle(400, 150, 50, 1.0);
  const SensingMatrix a = random_normalized(200, 400, 17);
  const Eigen::VectorXd y = a.matrix * signal.values;

  // Score dominance of the aligned block, checked numerically.
  const Eigen::VectorXd corr = a.matrix.transpose() * y;
  double aligned = 0.0;
  double best_other = 0.0;
  for (int block = 0; block < 8; ++block) {
    double score = 0.0;
    for (int j = block * 50; j < (block + 1) * 50; ++j) {
      score += std::abs(corr[j]);
    }
    if (block == 3) {
      aligned = score;
    } else {
      best_other = std::max(best_other, score);
    }
  }
  CHECK(aligned > best_other);

  const RecoveryResult result = bomp(a, y, 50, 1);
  SupportSet expected;
  for (int j = 150; j < 200; ++j) expected.push_back(j);
  CHECK(sorted_copy(result.support) == expected);
}

TEST_CASE("bomp short final block covers the tail") {
  const SensingMatrix a = random_normalized(30, 25, 21);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(25);
  for (int j = 20; j < 25; ++j) x[j] = 3.0;  // fills the short block {20..24}
  const RecoveryResult result = bomp(a, a.matrix * x, 10, 1);
  CHECK(result.support.size() == 5);
  CHECK(sorted_copy(result.support) == SupportSet{20, 21, 22, 23, 24});
}

TEST_CASE("lamp with infinite threshold reduces to omp") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RngStream rng(1100 + seed);
    const SensingMatrix a = random_normalized(24, 48, 1100 + seed);
    const SupportSet truth = random_support(48, 5, rng);
    const Eigen::VectorXd y = a.matrix * spikes(48, truth, rng);

    const RecoveryResult via_omp = omp(a, y, 8);
    const RecoveryResult via_lamp = lamp_smv(a, y, lamp_as_omp(8));
    CHECK(via_omp.support == via_lamp.support);
    CHECK(via_lamp.seed_searches == via_lamp.iterations);
    for (const GroupRecord& group : via_lamp.groups) {
      CHECK(group.k_up == 1);
      CHECK(group.k_down == 1);
    }
  }
}

TEST_CASE("lamp oracle mode sweeps a flat group in one seed search") {
  // Well-conditioned instance: coherence below 1/3 so the oracle threshold
  // sits beneath the per-element drop of the flat group.
  const SensingMatrix a = random_normalized(300, 330, 23);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(330);
  for (int j = 100; j < 105; ++j) x[j] = 1.0;
  const Eigen::VectorXd y = a.matrix * x;

  LampConfig config;
  config.sparsity = 5;
  config.epsilon_mode = EpsilonMode::Oracle;
  config.oracle_signal = x;
  const RecoveryResult result = lamp_smv(a, y, config);

  CHECK(result.seed_searches == 1);
  CHECK(sorted_copy(result.support) == SupportSet{100, 101, 102, 103, 104});
  CHECK(result.stop_reason == StopReason::SparsityReached);
  REQUIRE(result.groups.size() == 1);
  CHECK(result.groups[0].k_up + result.groups[0].k_down - 1 == 5);
}

TEST_CASE("lamp oracle guard admits only true-support neighbors") {
  // Instances filtered to coherence < 1/(3 sqrt(K)); on those the
  // admission rule must never pick an index outside the planted support.
  int usable = 0;
  int false_admissions = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SensingMatrix a = random_normalized(400, 420, 1300 + seed);
    const int k = 2;
    if (coherence(a) >= 1.0 / (3.0 * std::sqrt(static_cast<double>(k)))) {
      continue;
    }
    ++usable;

    RngStream rng(1300 + seed);
    const int start = static_cast<int>(rng.next_below(418));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(420);
    x[start] = 1.0;
    x[start + 1] = 1.0;

    LampConfig config;
    config.sparsity = k;
    config.epsilon_mode = EpsilonMode::Oracle;
    config.oracle_signal = x;
    const RecoveryResult result = lamp_smv(a, a.matrix * x, config);

    for (const GroupRecord& group : result.groups) {
      for (int member : group.members) {
        if (member != group.seed_row && x[member] == 0.0) {
          ++false_admissions;
        }
      }
    }
  }
  CHECK(usable >= 10);
  CHECK(false_admissions == 0);
}

TEST_CASE("lamp stops at max_groups and counts one search per group") {
  // Three well-separated flat groups; the group cap is the stop criterion.
  const SensingMatrix a = random_normalized(200, 250, 29);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(250);
  for (int j = 20; j < 37; ++j) x[j] = 1.0;
  for (int j = 100; j < 117; ++j) x[j] = -1.0;
  for (int j = 200; j < 216; ++j) x[j] = 1.0;
  const Eigen::VectorXd y = a.matrix * x;

  LampConfig config;
  config.sparsity = 50;
  config.epsilon_mode = EpsilonMode::RelativeToResidue;
  config.epsilon = 0.01;
  config.max_groups = 3;
  const RecoveryResult result = lamp_smv(a, y, config);

  CHECK(result.stop_reason == StopReason::MaxGroups);
  CHECK(result.seed_searches == 3);
  CHECK(result.groups.size() == 3);
  CHECK(result.seed_searches == static_cast<int>(result.groups.size()));
}

TEST_CASE("lamp respects the sparsity cap mid-scan") {
  const SensingMatrix a = random_normalized(100, 120, 33);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(120);
  for (int j = 50; j < 60; ++j) x[j] = 1.0;
  LampConfig config;
  config.sparsity = 4;
  config.epsilon_mode = EpsilonMode::RelativeToResidue;
  config.epsilon = 0.001;
  const RecoveryResult result = lamp_smv(a, a.matrix * x, config);
  CHECK(result.support.size() == 4);
  CHECK(result.stop_reason == StopReason::SparsityReached);
}

TEST_CASE("every algorithm keeps the residue monotone and support unique") {
  RngStream rng(47);
  const SensingMatrix a = random_normalized(30, 60, 47);
  const SupportSet truth = random_support(60, 6, rng);
  const Eigen::VectorXd y = a.matrix * spikes(60, truth, rng);

  LampConfig lamp_config;
  lamp_config.sparsity = 10;
  const std::vector<RecoveryResult> results = {
      omp(a, y, 10), ols(a, y, 10), bomp(a, y, 5, 2),
      lamp_smv(a, y, lamp_config)};
  for (const RecoveryResult& result : results) {
    for (std::size_t i = 1; i < result.residue_norms.size(); ++i) {
      CHECK(result.residue_norms[i] <=
            result.residue_norms[i - 1] + 1e-12 * y.norm());
    }
    const SupportSet unique = sorted_copy(result.support);
    CHECK(std::adjacent_find(unique.begin(), unique.end()) == unique.end());
  }
}

TEST_CASE("recovery is deterministic") {
  RngStream rng(53);
  const SensingMatrix a = random_normalized(25, 50, 53);
  const Eigen::VectorXd y = random_vector(25, rng);
  LampConfig config;
  config.sparsity = 8;
  const RecoveryResult first = lamp_smv(a, y, config);
  const RecoveryResult second = lamp_smv(a, y, config);
  CHECK(first.support == second.support);
  CHECK(first.coefficients == second.coefficients);
  CHECK(first.report() == second.report());
}

TEST_CASE("lamp config validation") {
  LampConfig config;
  config.sparsity = 0;
  CHECK_THROWS_AS(config.validate(false), ConfigError);
  config.residue_stop = 0.1;
  CHECK_NOTHROW(config.validate(false));
  config.epsilon = -1.0;
  CHECK_THROWS_AS(config.validate(false), ConfigError);
}

TEST_CASE("findresidue matches project_residue") {
  RngStream rng(61);
  const SensingMatrix a = random_normalized(12, 24, 61);
  const Eigen::VectorXd y = random_vector(12, rng);

  const Eigen::VectorXd base = findresidue(a, y, y, {}, {});
  CHECK((base - y).norm() == 0.0);

  const SupportSet support = {3, 7};
  const Eigen::VectorXd r = project_residue(a.matrix, support, y);
  const Eigen::VectorXd grown = findresidue(a, y, r, {11}, support);
  CHECK((grown - project_residue(a.matrix, {3, 7, 11}, y)).norm() <= 1e-12);

  CHECK_THROWS(findresidue(a, y, r, {3}, support));
}
