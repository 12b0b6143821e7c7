// Copyright 2026 The Authors.
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

// Exact min-plus arithmetic over Q ∪ {∞}.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tropflag {

using Rational = mpq_class;

// Parses "p/q" or an integer string; throws UsageError otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// An element of the tropical semifield: a rational number or ∞.
class TropicalValue {
 public:
  // Default-constructed values are ∞, the neutral element of ⊕.
  TropicalValue() = default;
  // Non-canonical inputs such as Rational(2, 4) are canonicalized.
  TropicalValue(Rational value) : finite_(true), value_(std::move(value)) {
    value_.canonicalize();
  }
  TropicalValue(long value) : finite_(true), value_(value) {}
  TropicalValue(int value) : finite_(true), value_(value) {}

  static TropicalValue infinity() { return TropicalValue(); }
  // Accepts "inf" or a rational literal.
  static TropicalValue parse(const std::string& text);

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  // Precondition: is_finite().
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  // ∞ compares greater than every finite value.
  friend std::strong_ordering operator<=>(const TropicalValue& a,
                                          const TropicalValue& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  bool finite_ = false;
  Rational value_;
};

// a ⊕ b = min(a, b).
// gtest pretty-printing.
inline void PrintTo(const TropicalValue& v, std::ostream* os) {
  *os << v.to_string();
}

TropicalValue oplus(const TropicalValue& a, const TropicalValue& b);
// a ⊙ b = a + b, with ∞ absorbing.
TropicalValue odot(const TropicalValue& a, const TropicalValue& b);

// True iff the minimum of `terms` is attained at two or more indices, or the
// minimum is ∞ (including the single-term case). Throws UsageError on an
// empty list.
bool min_achieved_twice(std::span<const TropicalValue> terms);

// Same semantics as min_achieved_twice, but the empty list counts as ∞.
bool min_achieved_twice_or_empty(std::span<const TropicalValue> terms);

// A point of tropical projective space P(T^n), kept in the canonical
// representative whose minimum finite coordinate is 0.
class TropicalPoint {
 public:
  TropicalPoint() = default;

  std::size_t size() const { return coords_.size(); }
  const TropicalValue& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<TropicalValue>& coords() const { return coords_; }
  std::string to_string() const;

  friend bool operator==(const TropicalPoint&, const TropicalPoint&) = default;
  friend bool operator<(const TropicalPoint& a, const TropicalPoint& b) {
    return a.coords_ < b.coords_;
  }

 private:
  friend std::optional<TropicalPoint> try_normalize(
      std::vector<TropicalValue> raw);
  std::vector<TropicalValue> coords_;
};

// Shifts `raw` so its minimum finite coordinate is 0. Throws DomainError when
// every coordinate is ∞.
inline void PrintTo(const TropicalPoint& p, std::ostream* os) {
  *os << p.to_string();
}

TropicalPoint normalize(std::vector<TropicalValue> raw);

// Same as normalize but returns nullopt for the all-∞ vector.
std::optional<TropicalPoint> try_normalize(std::vector<TropicalValue> raw);

// Coefficient vector of the tropical linear form ⊕ C_i ⊙ x_i.
class TropicalLinearForm {
 public:
  // Throws DomainError when every coefficient is ∞.
  explicit TropicalLinearForm(std::vector<TropicalValue> coefficients);

  std::size_t size() const { return coefficients_.size(); }
  const std::vector<TropicalValue>& coefficients() const {
    return coefficients_;
  }

 private:
  std::vector<TropicalValue> coefficients_;
};

// True iff min_i (C_i + x_i) is attained at least twice (∞ convention
// included). Throws UsageError on a dimension mismatch.
bool form_evaluate_twice(const TropicalLinearForm& form, const TropicalPoint& x);
bool form_evaluate_twice(std::span<const TropicalValue> coefficients,
                         std::span<const TropicalValue> x);

}  // namespace tropflag
