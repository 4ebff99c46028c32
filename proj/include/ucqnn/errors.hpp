// Copyright 2026 The ucqnn Authors
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

namespace ucqnn {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance document; the message names the offending field.
class ParseError : public Error {
  public:
    ParseError(const std::string &field, const std::string &what)
        : Error("field '" + field + "': " + what), field_(field) {}
    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Penalty or slack configuration that cannot encode the instance.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Problem size above what the dense routines support.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Caller broke a precondition (index out of range, size mismatch).
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A gate crosses a declared register partition.
class PartitionError : public Error {
  public:
    using Error::Error;
};

} // namespace ucqnn
