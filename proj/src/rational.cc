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

#include "latfree/rational.h"

#include <cctype>

#include "latfree/error.h"

namespace latfree {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kInvalidInput: return "invalid_input";
    case ErrorKind::kNotPointed: return "not_pointed";
    case ErrorKind::kEmptyInput: return "empty_input";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kBudgetExceeded: return "budget_exceeded";
    case ErrorKind::kInfiniteValue: return "infinite_value";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void CheckSize(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    Fail(ErrorKind::kDimensionMismatch,
         "vector sizes differ: " + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()));
  }
}

}  // namespace

Rat ParseRat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    Fail(ErrorKind::kParse, "not a rational: '" + std::string(text) + "'");
  }
  Int d(std::string(den), 10);
  if (d == 0) Fail(ErrorKind::kParse, "zero denominator: " + std::string(text));
  Rat r(Int(std::string(num), 10), d);
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::string FormatRat(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool IsIntegral(const Rat& value) { return value.get_den() == 1; }

bool IsIntegral(const Vec& v) {
  for (const Rat& x : v) {
    if (!IsIntegral(x)) return false;
  }
  return true;
}

const Rat& ExtRat::value() const {
  if (!value_) Fail(ErrorKind::kInfiniteValue, "value of +inf requested");
  return *value_;
}

Rat ExtRat::Reciprocal() const {
  if (!value_) return Rat(0);
  if (*value_ == 0) Fail(ErrorKind::kInfiniteValue, "reciprocal of zero");
  return Rat(1) / *value_;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRat ParseExtRat(std::string_view text) {
  if (text == "inf") return ExtRat::Infinity();
  return ExtRat(ParseRat(text));
}

std::string FormatExtRat(const ExtRat& value) {
  return value.is_infinite() ? "inf" : FormatRat(value.value());
}

std::ostream& operator<<(std::ostream& os, const ExtRat& value) {
  return os << FormatExtRat(value);
}

ExtRat Min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

Rat Dot(const Vec& a, const Vec& b) {
  CheckSize(a, b);
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec Add(const Vec& a, const Vec& b) {
  CheckSize(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec Sub(const Vec& a, const Vec& b) {
  CheckSize(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec Scale(const Rat& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec AddScaled(const Vec& a, const Rat& s, const Vec& b) {
  CheckSize(a, b);
  Vec r(a);
  if (s == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) r[i] += s * b[i];
  }
  return r;
}

bool IsZero(const Vec& v) {
  for (const Rat& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec ZeroVec(std::size_t n) { return Vec(n, Rat(0)); }

Vec UnitVec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

Vec ToRat(const IntVec& v) {
  Vec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

IntVec ToInt(const Vec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const Rat& x : v) {
    if (!IsIntegral(x)) Fail(ErrorKind::kInvalidInput, "non-integral entry");
    r.push_back(x.get_num());
  }
  return r;
}

Int DenominatorLcm(const Vec& v) {
  Int l(1);
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Vec PrimitiveIntegral(const Vec& v) {
  const Int l = DenominatorLcm(v);
  Int g(0);
  for (const Rat& x : v) {
    Int n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int n = v[i].get_num() * (l / v[i].get_den());
    r[i] = Rat(Int(n / g));
  }
  return r;
}

std::string FormatVec(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += FormatRat(v[i]);
  }
  return s + ")";
}

}  // namespace latfree
