/*
 * Copyright 2026 The revcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file wordops.hpp
 * @brief Codewords, cyclic shifts, reversal and m-quasi-reciprocal seeds.
 *
 * Index i of a codeword is the coefficient of x^i. shift(c, i) is the cyclic
 * right shift applied i times (negative i shifts left).
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revcodes/field.hpp"
#include "revcodes/field_text.hpp"

namespace revcodes {

class Codeword {
 public:
  Codeword(FieldPtr field, std::vector<Elem> entries) : field_(std::move(field)), entries_(std::move(entries)) {
    if (!field_) throw ValidationError("codeword needs a field");
    if (entries_.empty()) throw ValidationError("codeword length must be at least 1");
    for (Elem e : entries_)
      if (!field_->contains(e)) throw ValidationError("codeword entry outside " + field_->name());
  }

  static Codeword zeros(FieldPtr field, std::size_t n) { return {std::move(field), std::vector<Elem>(n, 0)}; }
  static Codeword ones(FieldPtr field, std::size_t n) { return {std::move(field), std::vector<Elem>(n, 1)}; }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }
  Felt at(std::size_t i) const { return {field_, entries_.at(i)}; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
  }

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Elem e) { return e != 0; }));
  }

  friend bool operator==(const Codeword& a, const Codeword& b) {
    return a.entries_ == b.entries_ && a.field_->same_as(*b.field_);
  }

  friend Codeword operator+(const Codeword& a, const Codeword& b) {
    a.check_compatible(b);
    std::vector<Elem> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->add(a.entries_[i], b.entries_[i]);
    return {a.field_, std::move(out)};
  }

  Codeword scaled(Elem s) const {
    std::vector<Elem> out(entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(s, entries_[i]);
    return {field_, std::move(out)};
  }

  void check_compatible(const Codeword& o) const {
    if (!field_->same_as(*o.field_)) throw FieldMismatchError("codewords over different fields");
    if (size() != o.size()) throw ValidationError("codewords of different lengths");
  }

 private:
  FieldPtr field_;
  std::vector<Elem> entries_;
};

inline std::string format_codeword(const Codeword& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += format_element(*c.field(), c[i]);
  }
  return out;
}

inline Codeword parse_codeword(FieldPtr field, std::string_view text, const SymbolTable& syms) {
  std::vector<Elem> entries;
  for (const auto& tok : split_tokens(text)) entries.push_back(parse_element(*field, tok, syms));
  return {std::move(field), std::move(entries)};
}

inline Codeword parse_codeword(FieldPtr field, std::string_view text) {
  const auto syms = default_symbols(*field);
  return parse_codeword(std::move(field), text, syms);
}

/// Entry j of the result is c_{(j - i) mod n}.
inline Codeword cyclic_shift(const Codeword& c, long long i) {
  const auto n = static_cast<long long>(c.size());
  const long long s = ((i % n) + n) % n;
  std::vector<Elem> out(c.size());
  for (long long j = 0; j < n; ++j) out[static_cast<std::size_t>((j + s) % n)] = c[static_cast<std::size_t>(j)];
  return {c.field(), std::move(out)};
}

inline Codeword reverse(const Codeword& c) {
  std::vector<Elem> out(c.entries().rbegin(), c.entries().rend());
  return {c.field(), std::move(out)};
}

/// First m entries and last n-m entries are each palindromic. m = 0 is the
/// self-reciprocal test.
inline bool is_m_quasi_reciprocal(const Codeword& c, std::size_t m) {
  const std::size_t n = c.size();
  if (m > n - 1) throw ValidationError("m = " + std::to_string(m) + " out of range [0, n-1] for n = " + std::to_string(n));
  for (std::size_t i = 0; i < m; ++i)
    if (c[i] != c[m - 1 - i]) return false;
  for (std::size_t j = m; j < n; ++j)
    if (c[j] != c[m + n - 1 - j]) return false;
  return true;
}

enum class SetVariant { S, E, E1, E2, E3 };

inline std::string to_string(SetVariant v) {
  switch (v) {
    case SetVariant::S: return "S";
    case SetVariant::E: return "E";
    case SetVariant::E1: return "E1";
    case SetVariant::E2: return "E2";
    case SetVariant::E3: return "E3";
  }
  return "?";
}

inline SetVariant parse_variant(std::string_view s) {
  if (s == "S") return SetVariant::S;
  if (s == "E") return SetVariant::E;
  if (s == "E1") return SetVariant::E1;
  if (s == "E2") return SetVariant::E2;
  if (s == "E3") return SetVariant::E3;
  throw ParseError("unknown set variant '" + std::string(s) + "' (expected S, E, E1, E2 or E3)");
}

/// Checks the (n, m) conditions a variant needs; throws naming the clause.
inline void check_variant_preconditions(std::size_t n, std::size_t m, SetVariant v) {
  auto need = [](bool ok, const std::string& clause) {
    if (!ok) throw VariantPreconditionError("variant precondition failed: " + clause);
  };
  need(n >= 1, "n >= 1");
  need(m <= n - 1, "0 <= m <= n-1");
  const bool inner = m >= 1 && m + 2 <= n;
  switch (v) {
    case SetVariant::S: break;
    case SetVariant::E:
      need(m == 0, "E requires m = 0");
      need(n % 2 == 0, "E requires n even");
      break;
    case SetVariant::E1:
      need(inner, "E1 requires 1 <= m <= n-2");
      need(m % 2 == 0, "E1 requires m even");
      break;
    case SetVariant::E2:
      need(inner, "E2 requires 1 <= m <= n-2");
      need((n - m) % 2 == 0, "E2 requires n-m even");
      break;
    case SetVariant::E3:
      need(inner, "E3 requires 1 <= m <= n-2");
      need(m % 2 == 0, "E3 requires m even");
      need((n - m) % 2 == 0, "E3 requires n-m even");
      break;
  }
}

/// Shift exponents of the generating set in listing order:
/// t, t-1, ..., 0, -m, -m-1, ..., -m-t, then the variant's extra shifts.
/// t is capped at n.
inline std::vector<long long> generating_set_exponents(std::size_t n, std::size_t m, std::size_t t, SetVariant v) {
  check_variant_preconditions(n, m, v);
  const auto tt = static_cast<long long>(std::min(t, n));
  const auto mm = static_cast<long long>(m);
  const auto nn = static_cast<long long>(n);
  std::vector<long long> out;
  for (long long i = tt; i >= 0; --i) out.push_back(i);
  for (long long i = 0; i <= tt; ++i) out.push_back(-mm - i);
  switch (v) {
    case SetVariant::S: break;
    case SetVariant::E: out.push_back(nn / 2); break;
    case SetVariant::E1: out.push_back(-mm / 2); break;
    case SetVariant::E2: out.push_back((nn - mm) / 2); break;
    case SetVariant::E3:
      out.push_back(-mm / 2);
      out.push_back((nn - mm) / 2);
      break;
  }
  return out;
}

/// The shifted copies of `c` listed by generating_set_exponents, with exact
/// duplicate words dropped (first occurrence kept).
inline std::vector<Codeword> build_generating_set(const Codeword& c, std::size_t m, std::size_t t, SetVariant v) {
  const auto exps = generating_set_exponents(c.size(), m, t, v);
  if (c.is_zero()) throw ValidationError("seed word is zero");
  if (!is_m_quasi_reciprocal(c, m))
    throw VariantPreconditionError("variant precondition failed: seed word is not " + std::to_string(m) +
                                   "-quasi-reciprocal");
  std::vector<Codeword> out;
  for (long long e : exps) {
    auto w = cyclic_shift(c, e);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace revcodes
