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

#include "gateid/rational.hpp"

#include <cmath>
#include <string>

#include "gateid/errors.hpp"

namespace gateid {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt factorial(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
            throw InvalidArgument("cannot parse rational '" + std::string(text) + "'");
        }
        return BigInt(std::string(s));
    };
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            den *= 10;
        }
        const BigInt w = whole.empty() ? BigInt(0) : parse_int(whole);
        const BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
        return {w * den + f, den};
    }
    return {parse_int(text), 1};
}

std::optional<Rational> Rational::snap(double value, std::uint64_t max_den,
                                       double tol) {
    if (!std::isfinite(value) || value < 0.0) {
        return std::nullopt;
    }
    // Convergents h/k of the continued fraction of value.
    std::uint64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double x = value;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(x);
        if (a > 1e15) {
            break;
        }
        const auto ai = static_cast<std::uint64_t>(a);
        const std::uint64_t h2 = ai * h1 + h0;
        const std::uint64_t k2 = ai * k1 + k0;
        if (k2 > max_den) {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double approx = static_cast<double>(h1) / static_cast<double>(k1);
        if (std::abs(approx - value) <= tol) {
            return Rational(BigInt(h1), BigInt(k1));
        }
        const double rest = x - a;
        if (rest <= 0.0) {
            break;
        }
        x = 1.0 / rest;
    }
    return std::nullopt;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

} // namespace gateid
