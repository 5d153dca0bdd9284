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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lampcs/sensing.hpp"
#include "lampcs/types.hpp"

namespace lampcs {

enum class StopReason {
  SparsityReached,
  ResidueSmall,
  MaxGroups,
  SupportSaturated,
};

std::string to_string(StopReason reason);

/// Neighbor-guard threshold semantics.
///   Absolute:          guard fires when drop > epsilon (units of |y|^2)
///   RelativeToResidue: guard fires when drop > epsilon * |r_n|^2
///   Oracle:            test-only; epsilon is ignored and the threshold is
///                      (d/(1-d))^2 * |x restricted to T^c|^2 with d the
///                      coherence of A (or oracle_delta) clamped below 1.
///                      Requires the true signal in oracle_signal(_mmv).
enum class EpsilonMode { Absolute, RelativeToResidue, Oracle };

EpsilonMode parse_epsilon_mode(const std::string& name);
std::string to_string(EpsilonMode mode);

enum class BlockNorm { L1, L2 };

struct LampConfig {
  int sparsity = 0;  // target support size K; 0 means "up to saturation"
  EpsilonMode epsilon_mode = EpsilonMode::RelativeToResidue;
  double epsilon = 0.01;
  std::optional<double> epsilon_prime;  // horizontal threshold, defaults to epsilon
  std::optional<int> max_groups;
  int merge_gap = 0;
  std::optional<double> residue_stop;  // stop when |r| <= residue_stop * |y|
  // Oracle mode inputs.
  std::optional<Eigen::VectorXd> oracle_signal;
  std::optional<Eigen::MatrixXd> oracle_signal_mmv;
  std::optional<double> oracle_delta;

  /// Throws ConfigError unless at least one stop criterion is set,
  /// epsilon >= 0 and merge_gap >= 0.
  void validate(bool mmv) const;
};

/// One recovered cluster. The vertical extents count the seed itself, so an
/// SMV group covers the contiguous range
///   [seed_row - (k_up - 1), seed_row + (k_down - 1)]
/// of size k_up + k_down - 1; an MMV group covers the rectangle of that row
/// range times columns [seed_col - (k_left - 1), seed_col + (k_right - 1)].
struct GroupRecord {
  int seed_row = 0;
  int seed_col = 0;  // always 0 for SMV
  int k_up = 1;
  int k_down = 1;
  int k_left = 1;  // both 1 for SMV
  int k_right = 1;

  SupportSet members;        // SMV
  SupportSet2D members_2d;   // MMV
};

struct RecoveryResult {
  bool mmv = false;
  SupportSet support;        // selection order (SMV)
  SupportSet2D support_2d;   // selection order (MMV)
  /// Least-squares values on the support, aligned with the selection order.
  Eigen::VectorXd coefficients;
  std::vector<GroupRecord> groups;  // empty for OMP/OLS/BOMP
  int iterations = 0;
  /// Number of full argmax correlation scans (the greedy-search unit).
  int seed_searches = 0;
  StopReason stop_reason = StopReason::SparsityReached;
  /// |r| after initialization and after every committed element
  /// (Frobenius norm for MMV); non-increasing.
  std::vector<double> residue_norms;

  /// Structured text report: stop reason, counters, SUPP/SUPP2D block
  /// (sorted), matching coefficients, group records.
  std::string report() const;
};

// ---------------------------------------------------------------------------
// Recovery algorithms. All require normalized sensing columns.
// Ties in every argmax go to the lowest index (lowest (col, row) pair in the
// MMV seed scan). Every algorithm stops early once the residue norm falls
// below max(1e-12, residue_stop) * |y|.
// ---------------------------------------------------------------------------

/// Orthogonal matching pursuit: repeatedly appends the index with the
/// largest |<A_j, r>| and reprojects.
RecoveryResult omp(const SensingMatrix& a, const Eigen::VectorXd& y,
                   int sparsity, std::optional<double> residue_stop = {});

/// Orthogonal least squares: appends the index whose inclusion shrinks the
/// residue the most (largest squared-residue drop).
RecoveryResult ols(const SensingMatrix& a, const Eigen::VectorXd& y,
                   int sparsity, std::optional<double> residue_stop = {});

/// Block OMP over fixed contiguous blocks of size `block_size`; when
/// block_size does not divide N the final block is short. The block score
/// is the l1 norm of (A|_b)^T r (l2 selectable). Stops after `stop_blocks`
/// blocks.
RecoveryResult bomp(const SensingMatrix& a, const Eigen::VectorXd& y,
                    int block_size, int stop_blocks,
                    BlockNorm block_norm = BlockNorm::L1,
                    std::optional<double> residue_stop = {});

/// Locally adapting matching pursuit, single measurement vector: seeds a
/// group with an argmax correlation scan, then walks up and down from the
/// seed admitting neighbors while the squared-residue drop beats the
/// threshold; scans stop silently at the vector edges.
RecoveryResult lamp_smv(const SensingMatrix& a, const Eigen::VectorXd& y,
                        const LampConfig& config);

/// LAMP over an M x P measurement matrix: the seed scan runs over all
/// (column, row) pairs, the vertical phase works inside the seed column,
/// then whole row-blocks (the seed column's row range, frozen) are tested
/// one column to the left/right at a time against the horizontal threshold,
/// growing a minimal rectangle per group.
RecoveryResult lamp_mmv(const SensingMatrix& a, const Eigen::MatrixXd& y,
                        const LampConfig& config);

// ---------------------------------------------------------------------------
// Shared machinery.
// ---------------------------------------------------------------------------

/// Residue after augmenting `support` with `new_indices`:
/// P_{T u new}^perp y. The previous residue is accepted for interface
/// symmetry with the MMV overload; the result is recomputed from scratch.
Eigen::VectorXd findresidue(const SensingMatrix& a, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& residue,
                            const SupportSet& new_indices,
                            const SupportSet& support);

/// MMV form: only the columns touched by `new_cells` are reprojected; the
/// rest are copied from `residue`.
Eigen::MatrixXd findresidue(const SensingMatrix& a, const Eigen::MatrixXd& y,
                            const Eigen::MatrixXd& residue,
                            const SupportSet2D& new_cells,
                            const SupportSet2D& support);

/// Unions group index ranges, bridging vertical gaps of at most `gap` rows
/// (including the in-between indices), with transitive closure.
SupportSet merge_supports(const std::vector<GroupRecord>& groups, int gap);

/// MMV variant: merges per column, then reassembles the cell set.
SupportSet2D merge_supports_2d(const std::vector<GroupRecord>& groups,
                               int gap);

/// Discrete-Fourier-domain mask keeping bins [low_bin, high_bin] (and their
/// conjugate mirrors), zeroing the rest. Output is real. Requires
/// 0 <= low_bin <= high_bin <= N/2.
Eigen::VectorXd bandlimit_filter(const Eigen::VectorXd& x, int low_bin,
                                 int high_bin);

/// Smallest contiguous bin window [low, high] holding at least
/// `energy_fraction` of the pulse's spectral energy.
std::pair<int, int> spectral_band(const Eigen::VectorXd& pulse,
                                  double energy_fraction);

/// Least-squares reconstruction on the given support, zero elsewhere.
Eigen::VectorXd reconstruct_coeffs(const SensingMatrix& a,
                                   const SupportSet& support,
                                   const Eigen::VectorXd& y);

/// MMV: per-column least squares on each column's selected rows.
Eigen::MatrixXd reconstruct_coeffs(const SensingMatrix& a,
                                   const SupportSet2D& support,
                                   const Eigen::MatrixXd& y);

}  // namespace lampcs
