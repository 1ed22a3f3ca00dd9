// Copyright 2026 The gateid Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gateid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch, out-of-range parameter, malformed input.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A gate set, POVM or strategy failed its invariants.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A requested dimension exceeds the configured cap.
class CapExceeded : public Error {
  public:
    CapExceeded(const std::string &what, std::size_t requested,
                std::size_t cap)
        : Error(what + ": dimension " + std::to_string(requested) +
                " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    [[nodiscard]] std::size_t requested() const { return requested_; }
    [[nodiscard]] std::size_t cap() const { return cap_; }

  private:
    std::size_t requested_;
    std::size_t cap_;
};

/// Non-Hermitian input, negative eigenvalue beyond tolerance, and similar.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// A search ran out of its range without meeting the target condition.
class Infeasible : public Error {
  public:
    using Error::Error;
};

} // namespace gateid
