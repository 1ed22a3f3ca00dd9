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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gateid {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
[[nodiscard]] BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Exact factorial.
[[nodiscard]] BigInt factorial(std::uint64_t n);

/// Nonnegative rational p/q in lowest terms, q > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den);
    explicit Rational(std::int64_t value) : num_(value), den_(1) {}

    /// Parses "p/q", an integer, or a finite decimal such as "0.125".
    static Rational parse(std::string_view text);

    /**
     * Closest fraction with denominator at most `max_den` (continued
     * fractions), accepted only when it is within `tol` of `value`.
     */
    static std::optional<Rational> snap(double value,
                                        std::uint64_t max_den = 1000000,
                                        double tol = 1e-12);

    [[nodiscard]] const BigInt &num() const { return num_; }
    [[nodiscard]] const BigInt &den() const { return den_; }
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool is_zero() const { return num_ == 0; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational &a, const Rational &b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

  private:
    BigInt num_;
    BigInt den_;
};

} // namespace gateid
