// Copyright 2026 The pgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PGS_ERROR_HPP_
#define PGS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace pgs {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad dt, NaN input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numerical state became non-finite while integrating.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// One or more configuration values are invalid. Carries every violation
// found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Malformed input file (airframe dataset, JSON config).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pgs

#endif  // PGS_ERROR_HPP_
