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
#include <iosfwd>
#include <string>

#include "lampcs/types.hpp"

namespace lampcs {

// DMAT text format: header line "DMAT <rows> <cols>" followed by <rows>
// lines of <cols> space-separated decimals at 17 significant digits, which
// round-trips doubles exactly. A vector is a one-column DMAT.
//
// Support sets: "SUPP <count>" followed by sorted indices, and
// "SUPP2D <count>" followed by one "row col" pair per line.

void write_dmat(std::ostream& out, const Eigen::MatrixXd& matrix);
void write_dmat(const std::string& path, const Eigen::MatrixXd& matrix);

Eigen::MatrixXd read_dmat(std::istream& in);
Eigen::MatrixXd read_dmat(const std::string& path);

void write_support(std::ostream& out, const SupportSet& support);
void write_support(std::ostream& out, const SupportSet2D& support);

SupportSet read_support(std::istream& in);
SupportSet2D read_support_2d(std::istream& in);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double value);

}  // namespace lampcs
