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

#include "lampcs/incremental_qr.hpp"

#include <algorithm>

namespace lampcs {

IncrementalQr::IncrementalQr(Eigen::Index rows) : rows_(rows) {
  if (rows < 1) throw Error("IncrementalQr: rows must be positive");
}

void IncrementalQr::reserve(Eigen::Index capacity) {
  if (q_.cols() >= capacity) return;
  const Eigen::Index grown =
      std::min<Eigen::Index>(rows_, std::max<Eigen::Index>(16, 2 * capacity));
  const Eigen::Index next = std::max(grown, capacity);
  q_.conservativeResize(rows_, next);
  r_.conservativeResize(next, next);
}

Eigen::VectorXd IncrementalQr::orthogonalize(const Eigen::VectorXd& col) const {
  if (col.size() != rows_) {
    throw ShapeMismatchError("IncrementalQr: column length mismatch");
  }
  Eigen::VectorXd v = col;
  if (size_ > 0) {
    const auto q = basis();
    // Two Gram-Schmidt passes keep the result orthogonal to working
    // precision even when `col` leans heavily into the span.
    v.noalias() -= q * (q.transpose() * v);
    v.noalias() -= q * (q.transpose() * v);
  }
  return v;
}

void IncrementalQr::push_column(const Eigen::VectorXd& col) {
  if (col.size() != rows_) {
    throw ShapeMismatchError("IncrementalQr: column length mismatch");
  }
  if (size_ >= rows_) {
    throw RankDeficientError("IncrementalQr: factorization is full");
  }
  reserve(size_ + 1);

  Eigen::VectorXd v = col;
  Eigen::VectorXd h = Eigen::VectorXd::Zero(size_);
  if (size_ > 0) {
    const auto q = basis();
    Eigen::VectorXd h1 = q.transpose() * v;
    v.noalias() -= q * h1;
    Eigen::VectorXd h2 = q.transpose() * v;
    v.noalias() -= q * h2;
    h = h1 + h2;
  }
  const double rho = v.norm();
  if (!(rho > kRankTol * col.norm())) {
    throw RankDeficientError("IncrementalQr: column lies in the current span");
  }

  q_.col(size_) = v / rho;
  r_.col(size_).head(size_) = h;
  r_(size_, size_) = rho;
  ++size_;
}

void IncrementalQr::truncate(Eigen::Index size) {
  if (size < 0 || size > size_) {
    throw Error("IncrementalQr: bad truncation size");
  }
  size_ = size;
}

Eigen::VectorXd IncrementalQr::project_out(const Eigen::VectorXd& y) const {
  if (y.size() != rows_) {
    throw ShapeMismatchError("IncrementalQr: vector length mismatch");
  }
  if (size_ == 0) return y;
  const auto q = basis();
  return y - q * (q.transpose() * y);
}

Eigen::VectorXd IncrementalQr::solve(const Eigen::VectorXd& y) const {
  if (y.size() != rows_) {
    throw ShapeMismatchError("IncrementalQr: vector length mismatch");
  }
  if (size_ == 0) return Eigen::VectorXd(0);
  const Eigen::VectorXd qty = basis().transpose() * y;
  return r_.topLeftCorner(size_, size_)
      .triangularView<Eigen::Upper>()
      .solve(qty);
}

}  // namespace lampcs
