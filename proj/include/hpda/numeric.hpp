// Copyright 2026 The HPDA Authors
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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hpda {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as a machine integer. Throws ParameterError if it does not fit.
std::uint64_t binomial_u64(int n, int k);

Rational ratio(const BigInt& num, const BigInt& den);

// floor for non-negative and negative rationals alike.
BigInt floor(const Rational& r);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_fraction_string(const Rational& r);

/// Decimal with a fixed number of places, rounded half away from zero.
std::string to_decimal_string(const Rational& r, int places = 4);

/// Accepts "3", "-2", "0.01", "1/100".
Rational parse_rational(std::string_view text);

}  // namespace hpda
