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

#include "hpda/numeric.hpp"

#include <algorithm>
#include <limits>

#include "hpda/errors.hpp"

namespace hpda {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  const BigInt value = binomial(n, k);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw ParameterError("C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("zero denominator");
  return Rational(num, den);
}

BigInt floor(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < 0;
  const Rational magnitude = negative ? Rational(-r) : r;
  // Round half up on the magnitude.
  const BigInt scaled = floor(magnitude * scale + Rational(1, 2));
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (static_cast<int>(frac.size()) < places) {
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  }
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (places > 0) out += "." + frac;
  return out;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParameterError("malformed number '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParameterError("malformed number '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(body.substr(0, slash), text);
    const BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = body.substr(0, dot);
    const std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParameterError("malformed number '" + std::string(text) + "'");
    }
    const BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    const BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(frac, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace hpda
