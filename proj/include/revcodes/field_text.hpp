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

// Text form of field elements.
//
// The printer emits `0`, `1`, `w` or `w^<e>`, where e is the discrete log
// base the field's designated primitive element. The parser accepts a small
// expression language that contains those tokens:
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := integer | name ['^' ['-'] integer] | '(' expr ')'
//
// Names resolve through a symbol table (default: {"w" -> primitive}).
// Integers denote multiples of 1.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revcodes/field.hpp"

namespace revcodes {

using SymbolTable = std::vector<std::pair<std::string, Elem>>;

inline SymbolTable default_symbols(const Field& f) { return {{"w", f.primitive()}}; }

inline std::string format_element(const Field& f, Elem a) {
  if (a == 0) return "0";
  if (a == 1) return "1";
  const auto e = f.dlog(a);
  if (e == 1) return "w";
  return "w^" + std::to_string(e);
}

namespace detail {

class ElementParser {
 public:
  ElementParser(const Field& f, std::string_view text, const SymbolTable& syms) : f_(f), s_(text), syms_(syms) {}

  Elem parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty element");
    Elem v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " in element '" + std::string(s_) + "' at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expr() {
    Elem acc = term();
    for (;;) {
      if (eat('+')) {
        acc = f_.add(acc, term());
      } else if (eat('-')) {
        acc = f_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Elem term() {
    const bool negate = eat('-');
    Elem acc = factor();
    while (eat('*')) acc = f_.mul(acc, factor());
    return negate ? f_.neg(acc) : acc;
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Elem factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a factor");
    if (eat('(')) {
      const Elem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return f_.from_int(integer());
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a factor");
    const std::string_view name = s_.substr(start, pos_ - start);
    const Elem* base = nullptr;
    for (const auto& [sym, val] : syms_)
      if (sym == name) base = &val;
    if (!base) fail("unknown symbol '" + std::string(name) + "'");
    if (eat('^')) {
      const bool negative = eat('-');
      const long long e = integer();
      return f_.pow(*base, negative ? -e : e);
    }
    return *base;
  }

  const Field& f_;
  std::string_view s_;
  const SymbolTable& syms_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Elem parse_element(const Field& f, std::string_view text, const SymbolTable& syms) {
  return detail::ElementParser(f, text, syms).parse();
}

inline Elem parse_element(const Field& f, std::string_view text) {
  return parse_element(f, text, default_symbols(f));
}

/// Splits on commas (and surrounding whitespace); empty fields are errors.
inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty token in '" + std::string(text) + "'");
    out.emplace_back(tok);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace revcodes
