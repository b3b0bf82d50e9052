// Copyright 2026 The latfree Authors
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

// Exact scalars. Rat is GMP's canonical rational, ExtRat adds +infinity.

#ifndef LATFREE_RATIONAL_H_
#define LATFREE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace latfree {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Accepts "p", "-p", "p/q". Whitespace is not allowed. Throws kParse.
Rat ParseRat(std::string_view text);
std::string FormatRat(const Rat& value);

bool IsIntegral(const Rat& value);
bool IsIntegral(const Vec& v);

// A rational number or +infinity. Only ordering and reciprocals mix the two;
// arithmetic on an infinite value throws kInfiniteValue.
class ExtRat {
 public:
  ExtRat() : value_(Rat(0)) {}
  ExtRat(const Rat& value) : value_(value) {}  // NOLINT: implicit on purpose
  ExtRat(long value) : value_(Rat(value)) {}   // NOLINT
  static ExtRat Infinity() { return ExtRat(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rat& value() const;

  // 1/inf is 0. 1/0 throws.
  Rat Reciprocal() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  explicit ExtRat(std::nullopt_t) {}
  std::optional<Rat> value_;
};

// "inf" or a rational as in FormatRat.
ExtRat ParseExtRat(std::string_view text);
std::string FormatExtRat(const ExtRat& value);
std::ostream& operator<<(std::ostream& os, const ExtRat& value);

ExtRat Min(const ExtRat& a, const ExtRat& b);

// Vector helpers. Sizes must agree; mismatches throw kDimensionMismatch.
Rat Dot(const Vec& a, const Vec& b);
Vec Add(const Vec& a, const Vec& b);
Vec Sub(const Vec& a, const Vec& b);
Vec Scale(const Rat& s, const Vec& a);
// a + s * b
Vec AddScaled(const Vec& a, const Rat& s, const Vec& b);
bool IsZero(const Vec& v);
Vec ZeroVec(std::size_t n);
Vec UnitVec(std::size_t n, std::size_t i);
Vec ToRat(const IntVec& v);
IntVec ToInt(const Vec& v);  // throws unless integral

// Positive multiple of v with coprime integer entries. Zero maps to zero.
Vec PrimitiveIntegral(const Vec& v);
Int DenominatorLcm(const Vec& v);
std::string FormatVec(const Vec& v);

}  // namespace latfree

#endif  // LATFREE_RATIONAL_H_
