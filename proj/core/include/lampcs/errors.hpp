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

#include <stdexcept>
#include <string>

namespace lampcs {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A column subset turned out numerically rank deficient (duplicated or
/// span-inside column, or more columns than rows).
class RankDeficientError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ZeroColumnError : public Error {
 public:
  using Error::Error;
};

class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

/// A pulse window does not fit inside the signal bounds.
class WindowOverflowError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyTrueSupportError : public Error {
 public:
  using Error::Error;
};

class BadBandError : public Error {
 public:
  using Error::Error;
};

class InconsistentTrialCountsError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lampcs
