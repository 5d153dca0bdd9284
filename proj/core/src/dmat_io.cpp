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

#include "lampcs/dmat_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lampcs/errors.hpp"

namespace lampcs {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_dmat(std::ostream& out, const Eigen::MatrixXd& matrix) {
  out << "DMAT " << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      const double v = matrix(i, j);
      if (!std::isfinite(v)) {
        throw IoError("write_dmat: non-finite entry");
      }
      if (j > 0) out << ' ';
      out << format_double(v);
    }
    out << '\n';
  }
  if (!out) throw IoError("write_dmat: stream failure");
}

void write_dmat(const std::string& path, const Eigen::MatrixXd& matrix) {
  std::ofstream out(path);
  if (!out) throw IoError("write_dmat: cannot open " + path);
  write_dmat(out, matrix);
}

Eigen::MatrixXd read_dmat(std::istream& in) {
  std::string magic;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  if (!(in >> magic >> rows >> cols) || magic != "DMAT") {
    throw IoError("read_dmat: bad header");
  }
  if (rows < 1 || cols < 1) throw IoError("read_dmat: bad dimensions");
  Eigen::MatrixXd matrix(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double v = 0.0;
      if (!(in >> v)) throw IoError("read_dmat: truncated data");
      if (!std::isfinite(v)) throw IoError("read_dmat: non-finite entry");
      matrix(i, j) = v;
    }
  }
  return matrix;
}

Eigen::MatrixXd read_dmat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("read_dmat: cannot open " + path);
  return read_dmat(in);
}

void write_support(std::ostream& out, const SupportSet& support) {
  const SupportSet sorted = sorted_copy(support);
  out << "SUPP " << sorted.size() << '\n';
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) out << ' ';
    out << sorted[i];
  }
  if (!sorted.empty()) out << '\n';
  if (!out) throw IoError("write_support: stream failure");
}

void write_support(std::ostream& out, const SupportSet2D& support) {
  const SupportSet2D sorted = sorted_copy(support);
  out << "SUPP2D " << sorted.size() << '\n';
  for (const Cell& cell : sorted) {
    out << cell.row << ' ' << cell.col << '\n';
  }
  if (!out) throw IoError("write_support: stream failure");
}

SupportSet read_support(std::istream& in) {
  std::string magic;
  std::size_t count = 0;
  if (!(in >> magic >> count) || magic != "SUPP") {
    throw IoError("read_support: bad header");
  }
  SupportSet support(count);
  for (auto& index : support) {
    if (!(in >> index)) throw IoError("read_support: truncated data");
  }
  return support;
}

SupportSet2D read_support_2d(std::istream& in) {
  std::string magic;
  std::size_t count = 0;
  if (!(in >> magic >> count) || magic != "SUPP2D") {
    throw IoError("read_support_2d: bad header");
  }
  SupportSet2D support(count);
  for (auto& cell : support) {
    if (!(in >> cell.row >> cell.col)) {
      throw IoError("read_support_2d: truncated data");
    }
  }
  return support;
}

}  // namespace lampcs
