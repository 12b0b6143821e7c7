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

#include <map>
#include <string>

#include "tropflag/tropical.hpp"

namespace tropflag {

// A finite sum Σ c·t^q with rational exponents q and nonzero rational
// coefficients c. val(f) is the least exponent; val(0) = ∞.
class LaurentElement {
 public:
  LaurentElement() = default;
  // c·t^e; zero when c == 0.
  LaurentElement(Rational coefficient, Rational exponent = 0);
  static LaurentElement monomial(Rational coefficient, Rational exponent) {
    return LaurentElement(std::move(coefficient), std::move(exponent));
  }
  // "t^1 + 3*t^-1/2", "-2", "t", "1/2*t^3". Throws UsageError.
  static LaurentElement parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  TropicalValue valuation() const;
  // exponent → coefficient, ascending exponents.
  const std::map<Rational, Rational>& terms() const { return terms_; }
  std::string to_string() const;

  LaurentElement& operator+=(const LaurentElement& other);
  LaurentElement& operator-=(const LaurentElement& other);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
    return a += b;
  }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) {
    return a -= b;
  }
  friend LaurentElement operator-(const LaurentElement& a);
  friend LaurentElement operator*(const LaurentElement& a,
                                  const LaurentElement& b);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);
  std::map<Rational, Rational> terms_;
};

// Exact quotient a / b. Throws DomainError when b is zero or does not divide a
// within finite sums.
LaurentElement exact_divide(const LaurentElement& a, const LaurentElement& b);

}  // namespace tropflag
