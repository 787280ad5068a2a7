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
 * @file dna.hpp
 * @brief DNA words, the k-base <-> GF(4^k) correspondence and map-codes.
 *
 * A DNA k-base b_1...b_k corresponds to the element
 *
 *     w*zeta(b_1) + w^2*zeta(b_2) + ... + w^(k-1)*zeta(b_{k-1}) + w^m*zeta(b_k)
 *
 * of GF(4^k), where w is primitive, w^m = 1 + w + ... + w^(k-1) and
 * zeta(A, T, C, G) = (0, 1, alpha, 1+alpha). The coordinates of an element in
 * that basis are therefore exactly the zeta-images of its k-base, so reversal
 * of the k-base is coordinate reversal (phi) and rotation is eta.
 *
 * For k = 1 the basis collapses to {1} and the map is zeta itself.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revcodes/field.hpp"
#include "revcodes/lincode.hpp"
#include "revcodes/wordops.hpp"

namespace revcodes {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// ---------------------------------------------------------------------------
// Nucleotides and words
// ---------------------------------------------------------------------------

/// zeta: A -> 0, T -> 1, C -> alpha, G -> 1 + alpha, in the packed encoding
/// of the canonical GF(4) (alpha = 2).
inline Elem zeta(char b) {
  switch (b) {
    case 'A': return 0;
    case 'T': return 1;
    case 'C': return 2;
    case 'G': return 3;
  }
  throw ParseError(std::string("not a DNA symbol: '") + b + "'");
}

inline char zeta_inv(Elem e) {
  static constexpr std::array<char, 4> kSymbols{'A', 'T', 'C', 'G'};
  if (e > 3) throw ValidationError("not a GF(4) element: " + std::to_string(e));
  return kSymbols[e];
}

/// Watson-Crick complement: A <-> T, C <-> G.
inline char complement(char b) {
  switch (b) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
  }
  throw ParseError(std::string("not a DNA symbol: '") + b + "'");
}

class DnaWord {
 public:
  DnaWord() = default;
  explicit DnaWord(std::string symbols) : s_(std::move(symbols)) {
    for (char c : s_)
      if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
        throw ParseError("invalid DNA symbol '" + std::string(1, c) + "' in '" + s_ + "'");
  }

  const std::string& str() const { return s_; }
  std::size_t size() const { return s_.size(); }
  char operator[](std::size_t i) const { return s_[i]; }

  /// Number of G and C symbols.
  std::size_t gc_count() const {
    return static_cast<std::size_t>(std::count_if(s_.begin(), s_.end(), [](char c) { return c == 'G' || c == 'C'; }));
  }

  friend auto operator<=>(const DnaWord&, const DnaWord&) = default;

 private:
  std::string s_;
};

inline DnaWord dna_reverse(const DnaWord& w) { return DnaWord(std::string(w.str().rbegin(), w.str().rend())); }

inline DnaWord dna_complement(const DnaWord& w) {
  std::string out = w.str();
  for (auto& c : out) c = complement(c);
  return DnaWord(std::move(out));
}

inline DnaWord dna_reverse_complement(const DnaWord& w) { return dna_complement(dna_reverse(w)); }

inline std::size_t hamming_distance(const DnaWord& a, const DnaWord& b) {
  if (a.size() != b.size()) throw ValidationError("DNA words of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Splits a word into consecutive k-bases.
inline std::vector<std::string> split_kbases(const DnaWord& w, std::size_t k) {
  if (k == 0 || w.size() % k != 0)
    throw ValidationError("DNA word length " + std::to_string(w.size()) + " is not a multiple of k = " +
                          std::to_string(k));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < w.size(); i += k) out.push_back(w.str().substr(i, k));
  return out;
}

/// Parses whitespace- or comma-separated k-bases ("TTT AAA TTT") into one word.
inline std::vector<std::string> parse_kbases(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  for (const auto& b : out) (void)DnaWord(b);
  return out;
}

/// Block-level quasi-reversibility: beta_i = reverse(beta_{m-1-i}) and
/// beta_j = reverse(beta_{m+n-1-j}). m = 0 is the self-reciprocal case.
inline bool is_dna_m_quasi_reciprocal(std::span<const std::string> blocks, std::size_t m) {
  const std::size_t n = blocks.size();
  if (n == 0) throw ValidationError("empty k-base tuple");
  if (m > n - 1) throw ValidationError("m = " + std::to_string(m) + " out of range [0, n-1] for n = " + std::to_string(n));
  for (const auto& b : blocks)
    if (b.size() != blocks.front().size()) throw ValidationError("k-bases of different lengths");
  auto rev = [](const std::string& s) { return std::string(s.rbegin(), s.rend()); };
  for (std::size_t i = 0; i < m; ++i)
    if (blocks[i] != rev(blocks[m - 1 - i])) return false;
  for (std::size_t j = m; j < n; ++j)
    if (blocks[j] != rev(blocks[m + n - 1 - j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DnaBasis
// ---------------------------------------------------------------------------

class DnaBasis {
 public:
  /// make_dna_basis. `field` must have order 4^k and be GF(4) itself (k = 1)
  /// or a tower over the canonical GF(4). omega defaults to the field's
  /// primitive element and must satisfy omega^((4^k-1)/3) = alpha.
  static DnaBasis make(std::size_t k, FieldPtr field, std::optional<Elem> omega = std::nullopt) {
    if (k == 0) throw ValidationError("k must be positive");
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < k; ++i) q *= 4;
    if (!field || field->order() != q)
      throw UnsupportedFieldError("k = " + std::to_string(k) + " needs a field of order " + std::to_string(q));
    const auto gf4 = canonical_field(4);
    const bool ok_shape = k == 1 ? field->same_as(*gf4)
                                 : field->base() && field->base()->same_as(*gf4) && field->extension_degree() == k;
    if (!ok_shape) throw UnsupportedFieldError(field->name() + " is not built over the canonical GF(4)");

    DnaBasis b;
    b.k_ = k;
    b.field_ = std::move(field);
    b.gf4_ = gf4;
    const Field& f = *b.field_;
    b.omega_ = omega.value_or(f.primitive());
    if (!f.is_primitive(b.omega_)) throw ValidationError("omega is not primitive");
    if (subfield_alpha(f, b.omega_) != gf4->primitive())
      throw ValidationError("omega does not satisfy alpha = omega^((4^k-1)/3)");

    Elem sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum = f.add(sum, f.pow(b.omega_, static_cast<long long>(i)));
    // sum != 0 since omega has order 4^k - 1 > k
    const std::uint32_t log_omega = f.dlog(b.omega_);
    const std::uint32_t log_sum = f.dlog(sum);
    // omega^m_exp = sum, solved in the exponent group Z/(q-1)
    const std::uint32_t n1 = f.order() - 1;
    std::optional<std::uint32_t> m_exp;
    for (std::uint32_t e = 0; e < n1 && !m_exp; ++e)
      if ((static_cast<std::uint64_t>(e) * log_omega) % n1 == log_sum) m_exp = e;
    if (!m_exp) throw InternalInconsistencyError("1 + omega + ... + omega^(k-1) is not a power of omega");
    b.m_exp_ = *m_exp;

    for (std::size_t i = 1; i < k; ++i) b.elements_.push_back(f.pow(b.omega_, static_cast<long long>(i)));
    b.elements_.push_back(f.pow(b.omega_, b.m_exp_));

    // Columns of `to_poly` are the polynomial-basis coordinates of the DNA
    // basis elements; invert it over GF(4).
    const Field& g = *gf4;
    std::vector<std::vector<Elem>> aug(k, std::vector<Elem>(2 * k, 0));
    for (std::size_t col = 0; col < k; ++col) {
      const auto pc = b.poly_coords(b.elements_[col]);
      for (std::size_t row = 0; row < k; ++row) aug[row][col] = pc[row];
    }
    for (std::size_t row = 0; row < k; ++row) aug[row][k + row] = 1;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t piv = col;
      while (piv < k && aug[piv][col] == 0) ++piv;
      if (piv == k) throw InternalInconsistencyError("DNA basis elements are linearly dependent over GF(4)");
      std::swap(aug[col], aug[piv]);
      const Elem s = g.inv(aug[col][col]);
      for (auto& x : aug[col]) x = g.mul(x, s);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == col || aug[r][col] == 0) continue;
        const Elem c = aug[r][col];
        for (std::size_t j = 0; j < 2 * k; ++j) aug[r][j] = g.sub(aug[r][j], g.mul(c, aug[col][j]));
      }
    }
    b.inverse_.assign(k, std::vector<Elem>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) b.inverse_[r][c] = aug[r][k + c];
    return b;
  }

  std::size_t k() const { return k_; }
  const FieldPtr& field() const { return field_; }
  const FieldPtr& gf4() const { return gf4_; }
  Elem omega() const { return omega_; }
  std::uint32_t m_exp() const { return m_exp_; }
  /// (omega, omega^2, ..., omega^(k-1), omega^m_exp)
  const std::vector<Elem>& elements() const { return elements_; }

  /// GF(4) coordinates (z_1, ..., z_k) of z in the DNA basis.
  std::vector<Elem> coords(Elem z) const {
    const auto pc = poly_coords(z);
    const Field& g = *gf4_;
    std::vector<Elem> out(k_, 0);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < k_; ++c) out[r] = g.add(out[r], g.mul(inverse_[r][c], pc[c]));
    return out;
  }

  Elem from_coords(std::span<const Elem> zs) const {
    if (zs.size() != k_) throw ValidationError("need exactly k coordinates");
    const Field& f = *field_;
    Elem out = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (zs[i] > 3) throw ValidationError("coordinate outside GF(4)");
      out = f.add(out, f.mul(zs[i], elements_[i]));
    }
    return out;
  }

  Elem zeta_bar(std::string_view kbase) const {
    if (kbase.size() != k_) throw ValidationError("k-base '" + std::string(kbase) + "' does not have length k");
    std::vector<Elem> zs(k_);
    for (std::size_t i = 0; i < k_; ++i) zs[i] = zeta(kbase[i]);
    return from_coords(zs);
  }

  std::string zeta_bar_inv(Elem z) const {
    std::string out;
    for (Elem c : coords(z)) out += zeta_inv(c);
    return out;
  }

  Codeword zeta_bar(const DnaWord& w) const {
    std::vector<Elem> entries;
    for (const auto& b : split_kbases(w, k_)) entries.push_back(zeta_bar(b));
    return {field_, std::move(entries)};
  }

  DnaWord zeta_bar_inv(const Codeword& c) const {
    check_field(c);
    std::string out;
    for (Elem e : c.entries()) out += zeta_bar_inv(e);
    return DnaWord(std::move(out));
  }

  /// Reverses the DNA-basis coordinates.
  Elem phi(Elem z) const {
    auto zs = coords(z);
    std::reverse(zs.begin(), zs.end());
    return from_coords(zs);
  }

  /// Rotates the DNA-basis coordinates left by one: (z_1..z_k) -> (z_2..z_k, z_1).
  Elem eta(Elem z) const { return eta_pow(z, 1); }

  Elem eta_pow(Elem z, long long l) const {
    auto zs = coords(z);
    const auto kk = static_cast<long long>(k_);
    const long long s = ((l % kk) + kk) % kk;
    std::rotate(zs.begin(), zs.begin() + s, zs.end());
    return from_coords(zs);
  }

  Codeword phi(const Codeword& c) const { return map(c, [&](Elem e) { return phi(e); }); }
  Codeword eta(const Codeword& c) const { return eta_pow(c, 1); }
  Codeword eta_pow(const Codeword& c, long long l) const { return map(c, [&](Elem e) { return eta_pow(e, l); }); }

  /// GF(4) coordinate expansion of length k*n; position i*k+j holds zeta of
  /// DNA symbol j of block i.
  Codeword expand(const Codeword& c) const {
    check_field(c);
    std::vector<Elem> out;
    out.reserve(c.size() * k_);
    for (Elem e : c.entries()) {
      const auto zs = coords(e);
      out.insert(out.end(), zs.begin(), zs.end());
    }
    return {gf4_, std::move(out)};
  }

  Codeword collapse(std::span<const Elem> gf4_coords) const {
    if (gf4_coords.empty() || gf4_coords.size() % k_ != 0) throw ValidationError("expansion length not a multiple of k");
    std::vector<Elem> out;
    for (std::size_t i = 0; i < gf4_coords.size(); i += k_) out.push_back(from_coords(gf4_coords.subspan(i, k_)));
    return {field_, std::move(out)};
  }

  static DnaWord word_of_expansion(std::span<const Elem> gf4_coords) {
    std::string s;
    s.reserve(gf4_coords.size());
    for (Elem e : gf4_coords) s += zeta_inv(e);
    return DnaWord(std::move(s));
  }

 private:
  DnaBasis() = default;

  void check_field(const Codeword& c) const {
    if (!c.field()->same_as(*field_)) throw FieldMismatchError("codeword is not over " + field_->name());
  }

  // coordinates in the polynomial basis {1, y, ..., y^(k-1)} over GF(4)
  std::vector<Elem> poly_coords(Elem z) const {
    if (k_ == 1) return {z};
    return field_->coeffs(z);
  }

  template <typename Fn>
  Codeword map(const Codeword& c, Fn fn) const {
    check_field(c);
    std::vector<Elem> out(c.size());
    std::transform(c.entries().begin(), c.entries().end(), out.begin(), fn);
    return {field_, std::move(out)};
  }

  std::size_t k_ = 0;
  FieldPtr field_;
  FieldPtr gf4_;
  Elem omega_ = 0;
  std::uint32_t m_exp_ = 0;
  std::vector<Elem> elements_;
  std::vector<std::vector<Elem>> inverse_;
};

inline DnaBasis make_dna_basis(std::size_t k, FieldPtr field, std::optional<Elem> omega = std::nullopt) {
  return DnaBasis::make(k, std::move(field), omega);
}

/// Canonical basis for k: the canonical field of order 4^k and its primitive.
inline DnaBasis make_dna_basis(std::size_t k) {
  if (k == 0) throw ValidationError("k must be positive");
  std::uint32_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= 4;
  return DnaBasis::make(k, canonical_field(q));
}

// ---------------------------------------------------------------------------
// Map-codes
// ---------------------------------------------------------------------------

/// GF(4)-span of { eta^j(g) : g in gens, 0 <= j < k } inside GF(4^k)^n. The
/// code is held as its GF(4) coordinate expansion of length k*n, whose
/// codewords are the zeta-images of the DNA words.
class MapCode {
 public:
  static MapCode build(std::span<const Codeword> gens, DnaBasis basis) {
    if (gens.empty()) throw ValidationError("map-code needs at least one generator");
    for (const auto& g : gens) {
      gens.front().check_compatible(g);
      if (!g.field()->same_as(*basis.field())) throw FieldMismatchError("generator is not over the basis field");
    }
    MapCode mc{std::move(basis)};
    std::vector<Codeword> expanded;
    for (const auto& g : gens) {
      for (std::size_t j = 0; j < mc.basis_.k(); ++j) {
        auto r = mc.basis_.eta_pow(g, static_cast<long long>(j));
        expanded.push_back(mc.basis_.expand(r));
        mc.generators_.push_back(std::move(r));
      }
    }
    mc.code_ = std::make_shared<LinearCode>(LinearCode::span(expanded));
    // greedy independent subset, in family order
    detail::Rows acc;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      acc.push_back(expanded[i].entries());
      auto trial = acc;
      if (detail::rref(*mc.basis_.gf4(), trial, expanded[i].size()).size() > rank) {
        ++rank;
        mc.independent_.push_back(i);
      } else {
        acc.pop_back();
      }
    }
    return mc;
  }

  const DnaBasis& basis() const { return basis_; }
  std::size_t k() const { return basis_.k(); }
  std::size_t n() const { return generators_.front().size(); }
  /// The eta^j(g_i) family, g-major.
  const std::vector<Codeword>& generators() const { return generators_; }
  /// Indices into generators() of a GF(4)-independent subset spanning the code.
  const std::vector<std::size_t>& independent_generators() const { return independent_; }
  const LinearCode& expanded() const { return *code_; }
  std::size_t dim4() const { return code_->k(); }
  std::uint64_t size() const { return code_->size(); }

  /// Minimum DNA-symbol Hamming distance (length k*n).
  std::size_t dna_distance(unsigned workers = 0) const { return code_->min_distance(workers); }
  /// Minimum Hamming distance counted in GF(4^k) symbols.
  std::size_t symbol_distance(unsigned workers = 0) const { return code_->min_block_distance(k(), workers); }

  bool contains(const DnaWord& w) const {
    if (w.size() != k() * n()) return false;
    std::vector<Elem> v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = zeta(w[i]);
    return code_->contains(std::span<const Elem>(v));
  }

  bool contains(const Codeword& c) const { return code_->contains(basis_.expand(c)); }

  /// Closed under DNA reversal (a coordinate permutation of the expansion).
  bool is_reverse_closed() const { return code_->is_reversible(); }

  /// Closed under WCC complement, i.e. the all-T word lies in the code.
  bool is_complement_closed() const {
    std::vector<Elem> ones(k() * n(), 1);
    return code_->contains(std::span<const Elem>(ones));
  }

  /// All DNA words, sorted.
  std::vector<DnaWord> words(std::uint64_t cap = kDefaultEnumerationCap) const {
    if (size() > cap)
      throw TooLargeError("map-code has 4^" + std::to_string(dim4()) + " words, above the enumeration cap " +
                          std::to_string(cap));
    std::vector<DnaWord> out;
    out.reserve(static_cast<std::size_t>(size()));
    code_->for_each_codeword([&](const std::vector<Elem>& v) { out.push_back(DnaBasis::word_of_expansion(v)); });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  explicit MapCode(DnaBasis b) : basis_(std::move(b)) {}

  DnaBasis basis_;
  std::vector<Codeword> generators_;
  std::vector<std::size_t> independent_;
  std::shared_ptr<const LinearCode> code_;
};

inline MapCode map_code(std::span<const Codeword> gens, DnaBasis basis) { return MapCode::build(gens, std::move(basis)); }

struct DnaCodeOptions {
  bool enumerate = true;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct DnaCode {
  std::vector<Codeword> generating_set;  // over GF(4^k), before the eta family
  MapCode code;
  std::optional<std::vector<DnaWord>> words;
};

namespace detail {

inline DnaCode build_dna_code(const Codeword& c, std::size_t m, std::size_t t, SetVariant v, const DnaBasis& basis,
                              bool with_ones, const DnaCodeOptions& opts) {
  if (!c.field()->same_as(*basis.field())) throw FieldMismatchError("seed word is not over the basis field");
  const auto exps = generating_set_exponents(c.size(), m, t, v);
  if (c.is_zero()) throw ValidationError("seed word is zero");
  const auto blocks = split_kbases(basis.zeta_bar_inv(c), basis.k());
  if (!is_dna_m_quasi_reciprocal(blocks, m))
    throw VariantPreconditionError("variant precondition failed: seed tuple is not DNA-" + std::to_string(m) +
                                   "-quasi-reciprocal");
  std::vector<Codeword> gens;
  auto push_unique = [&](Codeword w) {
    if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(std::move(w));
  };
  for (long long e : exps) push_unique(cyclic_shift(c, e));
  if (with_ones) push_unique(Codeword::ones(c.field(), c.size()));
  auto mc = map_code(gens, basis);
  std::optional<std::vector<DnaWord>> words;
  if (opts.enumerate) words = mc.words(opts.cap);
  return DnaCode{std::move(gens), std::move(mc), std::move(words)};
}

}  // namespace detail

/// Map-code over the shift family of a DNA-m-quasi-reciprocal seed; its DNA
/// image is closed under reversal.
inline DnaCode reversible_dna_code(const Codeword& c, std::size_t m, std::size_t t, SetVariant v,
                                   const DnaBasis& basis, const DnaCodeOptions& opts = {}) {
  return detail::build_dna_code(c, m, t, v, basis, false, opts);
}

/// As reversible_dna_code with the all-ones word added; the DNA image is
/// closed under reversal and complement.
inline DnaCode reversible_complement_dna_code(const Codeword& c, std::size_t m, std::size_t t, SetVariant v,
                                              const DnaBasis& basis, const DnaCodeOptions& opts = {}) {
  return detail::build_dna_code(c, m, t, v, basis, true, opts);
}

// ---------------------------------------------------------------------------
// Constraint checks on DNA word sets
// ---------------------------------------------------------------------------

struct ConstraintVerdict {
  bool pass = true;
  /// Index pairs (i, j), i <= j, that violate the constraint.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

struct ConstraintReport {
  std::size_t d = 0;
  ConstraintVerdict hamming;             // d(x, y) >= d, x != y
  ConstraintVerdict reverse;             // d(x^r, y) >= d, x = y included
  ConstraintVerdict reverse_complement;  // d(x^rc, y) >= d, x = y included
  bool fixed_gc = true;
  std::vector<std::size_t> gc_counts;
};

inline ConstraintReport check_constraints(std::span<const DnaWord> words, std::size_t d) {
  if (words.empty()) throw ValidationError("no DNA words to check");
  for (const auto& w : words)
    if (w.size() != words.front().size()) throw ValidationError("DNA words of different lengths");
  ConstraintReport rep;
  rep.d = d;
  std::vector<DnaWord> rev, rc;
  for (const auto& w : words) {
    rev.push_back(dna_reverse(w));
    rc.push_back(dna_reverse_complement(w));
    rep.gc_counts.push_back(w.gc_count());
  }
  auto flag = [](ConstraintVerdict& v, std::size_t i, std::size_t j) {
    v.pass = false;
    v.violations.emplace_back(i, j);
  };
  // d(x^r, y) = d(x, y^r), likewise for rc, so unordered pairs suffice.
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      if (j != i && hamming_distance(words[i], words[j]) < d) flag(rep.hamming, i, j);
      if (hamming_distance(rev[i], words[j]) < d) flag(rep.reverse, i, j);
      if (hamming_distance(rc[i], words[j]) < d) flag(rep.reverse_complement, i, j);
    }
  }
  rep.fixed_gc = std::all_of(rep.gc_counts.begin(), rep.gc_counts.end(),
                             [&](std::size_t c) { return c == rep.gc_counts.front(); });
  return rep;
}

/// Reads one word per line; blank lines and lines starting with '>' or '#'
/// are skipped.
inline std::vector<DnaWord> parse_dna_lines(std::string_view text) {
  std::vector<DnaWord> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    if (!line.empty() && line.front() != '>' && line.front() != '#') out.emplace_back(std::string(line));
    start = end + 1;
  }
  return out;
}

}  // namespace revcodes
