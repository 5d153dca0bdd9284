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

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "lampcs/dmat_io.hpp"
#include "lampcs/errors.hpp"
#include "lampcs/matrix_ops.hpp"
#include "lampcs/recovery.hpp"

namespace lampcs {

Eigen::VectorXd findresidue(const SensingMatrix& a, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& residue,
                            const SupportSet& new_indices,
                            const SupportSet& support) {
  if (residue.size() != y.size()) {
    throw ShapeMismatchError("findresidue: residue length mismatch");
  }
  SupportSet augmented = support;
  for (int index : new_indices) {
    if (contains(support, index)) {
      throw Error("findresidue: new index already in support");
    }
    augmented.push_back(index);
  }
  return project_residue(a.matrix, augmented, y);
}

Eigen::MatrixXd findresidue(const SensingMatrix& a, const Eigen::MatrixXd& y,
                            const Eigen::MatrixXd& residue,
                            const SupportSet2D& new_cells,
                            const SupportSet2D& support) {
  if (residue.rows() != y.rows() || residue.cols() != y.cols()) {
    throw ShapeMismatchError("findresidue: residue shape mismatch");
  }
  for (const Cell& cell : new_cells) {
    if (contains(support, cell)) {
      throw Error("findresidue: new cell already in support");
    }
  }

  // Rows of the augmented support, bucketed per touched column.
  std::map<int, SupportSet> touched;
  for (const Cell& cell : new_cells) touched[cell.col].push_back(cell.row);
  for (const Cell& cell : support) {
    auto it = touched.find(cell.col);
    if (it != touched.end()) it->second.push_back(cell.row);
  }

  Eigen::MatrixXd out = residue;
  for (const auto& [col, rows] : touched) {
    if (col < 0 || col >= y.cols()) {
      throw IndexOutOfRangeError("findresidue: column out of range");
    }
    out.col(col) = project_residue(a.matrix, rows, y.col(col));
  }
  return out;
}

namespace {

struct Interval {
  int first = 0;
  int last = 0;  // inclusive
};

/// Merges intervals whose gap (missing indices between them) is <= gap.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals,
                                      int gap) {
  if (intervals.empty()) return intervals;
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.first < b.first;
            });
  std::vector<Interval> merged;
  merged.push_back(intervals.front());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    Interval& tail = merged.back();
    if (intervals[i].first - tail.last - 1 <= gap) {
      tail.last = std::max(tail.last, intervals[i].last);
    } else {
      merged.push_back(intervals[i]);
    }
  }
  return merged;
}

}  // namespace

SupportSet merge_supports(const std::vector<GroupRecord>& groups, int gap) {
  if (gap < 0) throw ConfigError("merge_supports: gap must be >= 0");
  std::vector<Interval> intervals;
  for (const GroupRecord& group : groups) {
    if (group.members.empty()) continue;
    const SupportSet sorted = sorted_copy(group.members);
    intervals.push_back({sorted.front(), sorted.back()});
  }
  SupportSet merged;
  for (const Interval& interval : merge_intervals(std::move(intervals), gap)) {
    for (int index = interval.first; index <= interval.last; ++index) {
      merged.push_back(index);
    }
  }
  return merged;
}

SupportSet2D merge_supports_2d(const std::vector<GroupRecord>& groups,
                               int gap) {
  if (gap < 0) throw ConfigError("merge_supports: gap must be >= 0");
  // Per-column row intervals of every rectangle covering that column.
  std::map<int, std::vector<Interval>> per_column;
  for (const GroupRecord& group : groups) {
    if (group.members_2d.empty()) continue;
    int row_lo = group.members_2d.front().row;
    int row_hi = row_lo;
    int col_lo = group.members_2d.front().col;
    int col_hi = col_lo;
    for (const Cell& cell : group.members_2d) {
      row_lo = std::min(row_lo, cell.row);
      row_hi = std::max(row_hi, cell.row);
      col_lo = std::min(col_lo, cell.col);
      col_hi = std::max(col_hi, cell.col);
    }
    for (int col = col_lo; col <= col_hi; ++col) {
      per_column[col].push_back({row_lo, row_hi});
    }
  }
  SupportSet2D merged;
  for (auto& [col, intervals] : per_column) {
    for (const Interval& interval :
         merge_intervals(std::move(intervals), gap)) {
      for (int row = interval.first; row <= interval.last; ++row) {
        merged.push_back({row, col});
      }
    }
  }
  return merged;
}

Eigen::VectorXd bandlimit_filter(const Eigen::VectorXd& x, int low_bin,
                                 int high_bin) {
  const int n = static_cast<int>(x.size());
  if (low_bin < 0 || low_bin > high_bin || high_bin > n / 2) {
    throw BadBandError("bandlimit_filter: need 0 <= low <= high <= N/2");
  }

  // Plain O(N^2) DFT; signals here are a few hundred samples.
  using Complex = std::complex<double>;
  const double step = 2.0 * std::numbers::pi / n;
  std::vector<Complex> spectrum(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    for (int t = 0; t < n; ++t) {
      acc += x[t] * Complex(std::cos(step * k * t), -std::sin(step * k * t));
    }
    spectrum[static_cast<std::size_t>(k)] = acc;
  }

  Eigen::VectorXd filtered(n);
  for (int t = 0; t < n; ++t) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      const int mirrored = std::min(k, n - k);  // conjugate-symmetric bin
      if (mirrored < low_bin || mirrored > high_bin) continue;
      acc += spectrum[static_cast<std::size_t>(k)] *
             Complex(std::cos(step * k * t), std::sin(step * k * t));
    }
    filtered[t] = acc.real() / n;
  }
  return filtered;
}

std::pair<int, int> spectral_band(const Eigen::VectorXd& pulse,
                                  double energy_fraction) {
  const int n = static_cast<int>(pulse.size());
  if (n < 2) throw BadBandError("spectral_band: signal too short");
  if (!(energy_fraction > 0.0 && energy_fraction <= 1.0)) {
    throw BadBandError("spectral_band: fraction must be in (0, 1]");
  }

  const int half = n / 2;
  const double step = 2.0 * std::numbers::pi / n;
  std::vector<double> power(static_cast<std::size_t>(half) + 1, 0.0);
  double total = 0.0;
  for (int k = 0; k <= half; ++k) {
    double re = 0.0;
    double im = 0.0;
    for (int t = 0; t < n; ++t) {
      re += pulse[t] * std::cos(step * k * t);
      im -= pulse[t] * std::sin(step * k * t);
    }
    // Mirror bins share the energy of their conjugates.
    const double weight = (k == 0 || (n % 2 == 0 && k == half)) ? 1.0 : 2.0;
    power[static_cast<std::size_t>(k)] = weight * (re * re + im * im);
    total += power[static_cast<std::size_t>(k)];
  }
  if (total == 0.0) return {0, half};

  // Smallest contiguous window reaching the fraction; first match wins on
  // equal lengths.
  int best_low = 0;
  int best_high = half;
  for (int low = 0; low <= half; ++low) {
    double sum = 0.0;
    for (int high = low; high <= half; ++high) {
      sum += power[static_cast<std::size_t>(high)];
      if (sum >= energy_fraction * total) {
        if (high - low < best_high - best_low) {
          best_low = low;
          best_high = high;
        }
        break;
      }
    }
  }
  return {best_low, best_high};
}

Eigen::VectorXd reconstruct_coeffs(const SensingMatrix& a,
                                   const SupportSet& support,
                                   const Eigen::VectorXd& y) {
  Eigen::VectorXd x_hat = Eigen::VectorXd::Zero(a.cols());
  if (support.empty()) return x_hat;
  const Eigen::VectorXd coeffs =
      least_squares(submatrix_cols(a.matrix, support), y);
  for (std::size_t i = 0; i < support.size(); ++i) {
    x_hat[support[i]] = coeffs[static_cast<Eigen::Index>(i)];
  }
  return x_hat;
}

Eigen::MatrixXd reconstruct_coeffs(const SensingMatrix& a,
                                   const SupportSet2D& support,
                                   const Eigen::MatrixXd& y) {
  Eigen::MatrixXd x_hat = Eigen::MatrixXd::Zero(a.cols(), y.cols());
  std::map<int, SupportSet> per_column;
  for (const Cell& cell : support) {
    if (cell.col < 0 || cell.col >= y.cols()) {
      throw IndexOutOfRangeError("reconstruct_coeffs: column out of range");
    }
    per_column[cell.col].push_back(cell.row);
  }
  for (const auto& [col, rows] : per_column) {
    const Eigen::VectorXd coeffs =
        least_squares(submatrix_cols(a.matrix, rows), y.col(col));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      x_hat(rows[i], col) = coeffs[static_cast<Eigen::Index>(i)];
    }
  }
  return x_hat;
}

std::string RecoveryResult::report() const {
  std::ostringstream out;
  out << "stop_reason " << to_string(stop_reason) << '\n';
  out << "iterations " << iterations << '\n';
  out << "seed_searches " << seed_searches << '\n';

  // Sort support and coefficients together so the listing is canonical.
  if (!mmv) {
    std::vector<std::pair<int, double>> rows;
    rows.reserve(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
      rows.emplace_back(support[i], i < static_cast<std::size_t>(
                                            coefficients.size())
                                        ? coefficients[static_cast<Eigen::Index>(i)]
                                        : 0.0);
    }
    std::sort(rows.begin(), rows.end());
    out << "SUPP " << rows.size() << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) out << ' ';
      out << rows[i].first;
    }
    if (!rows.empty()) out << '\n';
    out << "COEFF " << rows.size() << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) out << ' ';
      out << format_double(rows[i].second);
    }
    if (!rows.empty()) out << '\n';
  } else {
    std::vector<std::pair<Cell, double>> rows;
    rows.reserve(support_2d.size());
    for (std::size_t i = 0; i < support_2d.size(); ++i) {
      rows.emplace_back(support_2d[i],
                        i < static_cast<std::size_t>(coefficients.size())
                            ? coefficients[static_cast<Eigen::Index>(i)]
                            : 0.0);
    }
    std::sort(rows.begin(), rows.end());
    out << "SUPP2D " << rows.size() << '\n';
    for (const auto& [cell, coeff] : rows) {
      out << cell.row << ' ' << cell.col << '\n';
    }
    out << "COEFF " << rows.size() << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) out << ' ';
      out << format_double(rows[i].second);
    }
    if (!rows.empty()) out << '\n';
  }

  out << "GROUPS " << groups.size() << '\n';
  for (const GroupRecord& group : groups) {
    out << "seed " << group.seed_row;
    if (mmv) out << ' ' << group.seed_col;
    out << " up " << group.k_up << " down " << group.k_down;
    if (mmv) {
      out << " left " << group.k_left << " right " << group.k_right;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lampcs
