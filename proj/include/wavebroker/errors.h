// Copyright 2026 The Wavebroker Authors
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

#ifndef WAVEBROKER_ERRORS_H_
#define WAVEBROKER_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace wavebroker {

// Base for every error the library raises on a broken precondition or
// configuration. Infeasibility of an allocation is not an error; it is
// reported through return values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Brute-force oracle guard exceeded.
class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

// A delta cell was already occupied. Always a caller bug.
class ConflictError : public Error {
 public:
  using Error::Error;
};

class EmptyCurveError : public Error {
 public:
  using Error::Error;
};

class DegenerateMarketError : public Error {
 public:
  using Error::Error;
};

class RoundCapExceededError : public Error {
 public:
  using Error::Error;
};

class InvalidOutcomeError : public Error {
 public:
  using Error::Error;
};

class UnknownNetworkError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Carries a location such as "/networks/0/links/2/capacity".
class ConfigError : public Error {
 public:
  ConfigError(std::string location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace wavebroker

#endif  // WAVEBROKER_ERRORS_H_
