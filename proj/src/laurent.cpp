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

#include "tropflag/laurent.hpp"

#include <cctype>

#include "tropflag/errors.hpp"

namespace tropflag {
namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

// One signed term without its leading sign: "3", "t", "3*t^-1/2", "t^2".
LaurentElement parse_term(const std::string& body, bool negative,
                          const std::string& full) {
  if (body.empty()) throw UsageError("bad Laurent term in '" + full + "'");
  Rational coefficient = 1;
  Rational exponent = 0;
  const auto tpos = body.find('t');
  if (tpos == std::string::npos) {
    coefficient = parse_rational(body);
  } else {
    std::string coeff_part = body.substr(0, tpos);
    std::string rest = body.substr(tpos + 1);
    if (!coeff_part.empty()) {
      if (coeff_part.back() != '*') {
        throw UsageError("expected '*' before t in '" + full + "'");
      }
      coeff_part.pop_back();
      coefficient = parse_rational(coeff_part);
    }
    if (rest.empty()) {
      exponent = 1;
    } else {
      if (rest.front() != '^') throw UsageError("expected '^' in '" + full + "'");
      rest.erase(0, 1);
      if (rest.size() > 1 && rest.front() == '(' && rest.back() == ')') {
        rest = rest.substr(1, rest.size() - 2);
      }
      exponent = parse_rational(rest);
    }
  }
  if (negative) coefficient = -coefficient;
  return LaurentElement(coefficient, exponent);
}

}  // namespace

LaurentElement::LaurentElement(Rational coefficient, Rational exponent) {
  coefficient.canonicalize();
  exponent.canonicalize();
  if (coefficient != 0) terms_.emplace(std::move(exponent), std::move(coefficient));
}

LaurentElement LaurentElement::parse(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw UsageError("empty Laurent element");
  LaurentElement out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw UsageError("bad Laurent element '" + text + "'");
    }
    // A term ends at the next + or - that is not part of an exponent.
    std::size_t end = pos;
    while (end < s.size()) {
      if ((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^' &&
          s[end - 1] != '(') {
        break;
      }
      ++end;
    }
    out += parse_term(s.substr(pos, end - pos), negative, text);
    pos = end;
  }
  return out;
}

TropicalValue LaurentElement::valuation() const {
  if (terms_.empty()) return TropicalValue::infinity();
  return TropicalValue(terms_.begin()->first);
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + e.get_str();
  }
  return out;
}

void LaurentElement::add_term(const Rational& exponent,
                              const Rational& coefficient) {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (coefficient != 0) terms_.emplace(exponent, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
  return *this;
}

LaurentElement operator-(const LaurentElement& a) {
  LaurentElement out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  LaurentElement out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(Rational(ea + eb), Rational(ca * cb));
    }
  }
  return out;
}

LaurentElement exact_divide(const LaurentElement& a, const LaurentElement& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return {};
  const auto& [b_low, b_coeff] = *b.terms().begin();
  const Rational b_high = b.terms().rbegin()->first;
  const Rational q_high = a.terms().rbegin()->first - b_high;
  LaurentElement quotient;
  LaurentElement rest = a;
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().begin();
    const Rational qe = e - b_low;
    if (qe > q_high) throw DomainError("inexact Laurent division");
    const LaurentElement term(Rational(c / b_coeff), qe);
    quotient += term;
    rest -= term * b;
  }
  return quotient;
}

}  // namespace tropflag
