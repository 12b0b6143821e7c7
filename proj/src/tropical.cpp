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

#include "tropflag/tropical.hpp"

#include <algorithm>

#include "tropflag/errors.hpp"

namespace tropflag {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t += c;
  }
  if (t.empty()) throw UsageError("empty rational literal");
  if (t.front() == '+') t.erase(0, 1);
  const auto slash = t.find('/');
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!is_integer(t)) throw UsageError("bad rational literal '" + text + "'");
    return Rational(mpz_class(t));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    throw UsageError("bad rational literal '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw UsageError("zero denominator in '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

TropicalValue TropicalValue::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "oo") {
    return infinity();
  }
  return TropicalValue(parse_rational(text));
}

const Rational& TropicalValue::value() const {
  if (!finite_) throw DomainError("value() called on tropical infinity");
  return value_;
}

std::string TropicalValue::to_string() const {
  return finite_ ? value_.get_str() : std::string("inf");
}

TropicalValue oplus(const TropicalValue& a, const TropicalValue& b) {
  return b < a ? b : a;
}

TropicalValue odot(const TropicalValue& a, const TropicalValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TropicalValue::infinity();
  return TropicalValue(Rational(a.value() + b.value()));
}

bool min_achieved_twice(std::span<const TropicalValue> terms) {
  if (terms.empty()) throw UsageError("min_achieved_twice: empty term list");
  return min_achieved_twice_or_empty(terms);
}

bool min_achieved_twice_or_empty(std::span<const TropicalValue> terms) {
  const TropicalValue* best = nullptr;
  int count = 0;
  for (const auto& t : terms) {
    if (best == nullptr || t < *best) {
      best = &t;
      count = 1;
    } else if (t == *best) {
      ++count;
    }
  }
  if (best == nullptr || best->is_infinite()) return true;
  return count >= 2;
}

std::string TropicalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::optional<TropicalPoint> try_normalize(std::vector<TropicalValue> raw) {
  const TropicalValue* lowest = nullptr;
  for (const auto& v : raw) {
    if (v.is_finite() && (lowest == nullptr || v < *lowest)) lowest = &v;
  }
  if (lowest == nullptr) return std::nullopt;
  const Rational shift = lowest->value();
  TropicalPoint p;
  p.coords_.reserve(raw.size());
  for (auto& v : raw) {
    p.coords_.push_back(v.is_finite() ? TropicalValue(Rational(v.value() - shift))
                                      : TropicalValue::infinity());
  }
  return p;
}

TropicalPoint normalize(std::vector<TropicalValue> raw) {
  auto p = try_normalize(std::move(raw));
  if (!p) throw DomainError("not a point of tropical projective space");
  return *std::move(p);
}

TropicalLinearForm::TropicalLinearForm(std::vector<TropicalValue> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (std::none_of(coefficients_.begin(), coefficients_.end(),
                   [](const TropicalValue& v) { return v.is_finite(); })) {
    throw DomainError("tropical linear form with all coefficients infinite");
  }
}

bool form_evaluate_twice(std::span<const TropicalValue> coefficients,
                         std::span<const TropicalValue> x) {
  if (coefficients.size() != x.size()) {
    throw UsageError("form_evaluate_twice: dimension mismatch");
  }
  std::vector<TropicalValue> terms;
  terms.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    terms.push_back(odot(coefficients[i], x[i]));
  }
  return min_achieved_twice(terms);
}

bool form_evaluate_twice(const TropicalLinearForm& form,
                         const TropicalPoint& x) {
  return form_evaluate_twice(form.coefficients(), x.coords());
}

}  // namespace tropflag
