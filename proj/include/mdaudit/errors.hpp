// Copyright 2026 the mdaudit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MDAUDIT_ERRORS_HPP
#define MDAUDIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdaudit {

// Error taxonomy. The CLI maps these onto exit codes:
//   ParseError / ConfigError / DataError -> 3 (data error)
//   ModelError                           -> 4 (model-invocation error)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (MOCAP-CSV, SPECTRO-CSV, weight files). Messages
// name the offending line where one exists.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: bad radar config, unusable weight table,
// missing radar markers, odd FFT size.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numerically or structurally unusable data: too few samples, degenerate
// geometry, infeasible velocity intervention, shape mismatches.
class DataError : public Error {
 public:
  using Error::Error;
};

// External model invocation failed: nonzero exit, timeout, missing or
// malformed output.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdaudit

#endif  // MDAUDIT_ERRORS_HPP
