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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "revcodes/dna.hpp"
#include "support/properties.hpp"

using namespace revcodes;

namespace {

std::string all_kbases_word(std::size_t k, std::uint64_t idx) {
  static const char kSym[] = "ATCG";
  std::string s(k, 'A');
  for (std::size_t i = 0; i < k; ++i, idx /= 4) s[i] = kSym[idx % 4];
  return s;
}

}  // namespace

TEST(Dna, ZetaAndComplement) {
  EXPECT_EQ(zeta('A'), 0u);
  EXPECT_EQ(zeta('T'), 1u);
  EXPECT_EQ(zeta('C'), 2u);
  EXPECT_EQ(zeta('G'), 3u);
  for (char b : std::string("ACGT")) {
    EXPECT_EQ(zeta_inv(zeta(b)), b);
    EXPECT_EQ(zeta(complement(b)), zeta(b) ^ 1u);  // complement adds 1 in GF(4)
  }
  EXPECT_THROW(zeta('N'), ValidationError);
}

TEST(Dna, WordBasics) {
  const DnaWord w("ACGTT");
  EXPECT_EQ(w.gc_count(), 2u);
  EXPECT_EQ(dna_reverse(w).str(), "TTGCA");
  EXPECT_EQ(dna_complement(w).str(), "TGCAA");
  EXPECT_EQ(dna_reverse_complement(w).str(), "AACGT");
  EXPECT_EQ(hamming_distance(w, DnaWord("ACGAA")), 2u);
  EXPECT_THROW(DnaWord("ACGU"), ValidationError);
  EXPECT_THROW(hamming_distance(w, DnaWord("AC")), ValidationError);
  EXPECT_EQ(split_kbases(w, 5).size(), 1u);
  EXPECT_THROW(split_kbases(w, 2), ValidationError);
  EXPECT_EQ(parse_kbases("ttt, AAA  gca"), (std::vector<std::string>{"TTT", "AAA", "GCA"}));
}

TEST(Dna, DnaQuasiReciprocal) {
  const std::vector<std::string> ok{"TCTC", "CTCT", "ATGC", "GCTA", "ATCG", "CGTA"};
  EXPECT_TRUE(is_dna_m_quasi_reciprocal(ok, 2));
  EXPECT_FALSE(is_dna_m_quasi_reciprocal(ok, 0));
  const std::vector<std::string> seed{"TTT", "AAA", "TTT", "TAA", "ATA", "ATA", "AAT"};
  EXPECT_TRUE(is_dna_m_quasi_reciprocal(seed, 3));
  EXPECT_THROW(is_dna_m_quasi_reciprocal(seed, 7), ValidationError);
  revcodes::testing::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = revcodes::testing::uniform(rng, 1, 4), n = revcodes::testing::uniform(rng, 1, 9);
    const std::size_t m = revcodes::testing::uniform(rng, 0, n - 1);
    EXPECT_TRUE(is_dna_m_quasi_reciprocal(revcodes::testing::random_dna_quasi_reciprocal(rng, k, n, m), m));
  }
}

TEST(Dna, BasisForGF64) {
  const auto b = make_dna_basis(3);
  const Field& f = *b.field();
  const Elem g = f.primitive();
  EXPECT_EQ(b.omega(), g);
  // 1 + g + g^2 = g^20, so the last basis element is g^20
  EXPECT_EQ(b.m_exp(), 20u);
  EXPECT_EQ(b.elements(), (std::vector<Elem>{g, f.pow(g, 2), f.pow(g, 20)}));
}

TEST(Dna, ZetaBarBijection) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto b = make_dna_basis(k);
    std::set<Elem> seen;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 4;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto s = all_kbases_word(k, idx);
      const Elem z = b.zeta_bar(s);
      seen.insert(z);
      EXPECT_EQ(b.zeta_bar_inv(z), s);
      EXPECT_EQ(b.from_coords(b.coords(z)), z);
    }
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(Dna, ZetaBarIsBasisExpansion) {
  // oracle: z = sum_i w^i zeta(b_i) for i < k, last position weighted by w^m_exp
  const auto b = make_dna_basis(3);
  const Field& f = *b.field();
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const auto s = all_kbases_word(3, idx);
    Elem z = 0;
    for (std::size_t i = 0; i < 3; ++i) z = f.add(z, f.mul(b.elements()[i], zeta(s[i])));
    EXPECT_EQ(b.zeta_bar(s), z) << s;
  }
}

TEST(Dna, KEqualsOneIsSymbolwiseZeta) {
  const auto b = make_dna_basis(1);
  for (char c : std::string("ACGT")) EXPECT_EQ(b.zeta_bar(std::string(1, c)), zeta(c));
}

TEST(Dna, PhiReversesKBases) {
  const auto r = revcodes::testing::phi_reverses_kbases();
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_GT(r.trials, 1000u);
}

TEST(Dna, EtaRotatesAndIsGF4Linear) {
  const auto r = revcodes::testing::eta_properties(4, 300);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  const auto b = make_dna_basis(3);
  EXPECT_EQ(b.zeta_bar_inv(b.eta(b.zeta_bar("AGT"))), "GTA");
}

TEST(Dna, ComplementAddsOne) {
  const auto r = revcodes::testing::complement_adds_one();
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Dna, ShiftEtaReverseIdentity) {
  const auto r = revcodes::testing::shift_eta_reverse_identity(8, 300);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Dna, BasisValidation) {
  EXPECT_THROW(make_dna_basis(0), ValidationError);
  EXPECT_THROW(make_dna_basis(3, canonical_field(16)), UnsupportedFieldError);
  EXPECT_THROW(make_dna_basis(3, Field::extension(canonical_field(2), {1, 1, 0, 0, 0, 0, 1})), UnsupportedFieldError);
  // a primitive element of GF(64) whose 21st power is 1+alpha, not alpha
  const auto f = canonical_field(64);
  for (Elem w : enumerate_primitive_elements(*f)) {
    if (subfield_alpha(*f, w) == 2u) {
      EXPECT_NO_THROW(make_dna_basis(3, f, w));
    } else {
      EXPECT_THROW(make_dna_basis(3, f, w), ValidationError);
    }
  }
  EXPECT_THROW(make_dna_basis(3, f, 1), ValidationError);
}

TEST(Dna, MapCodeExample) {
  const auto b = make_dna_basis(3);
  const auto seed = b.zeta_bar(DnaWord("TTTAAATTTTAAATAATAAAT"));
  const auto dc = reversible_dna_code(seed, 3, 0, SetVariant::S, b);
  EXPECT_EQ(dc.code.dim4(), 6u);
  ASSERT_TRUE(dc.words.has_value());
  EXPECT_EQ(dc.words->size(), 4096u);
  EXPECT_TRUE(std::binary_search(dc.words->begin(), dc.words->end(), DnaWord("CCCAAACCCAACCAACAAACA")));
  EXPECT_TRUE(dc.code.is_reverse_closed());
  EXPECT_FALSE(dc.code.is_complement_closed());
  EXPECT_EQ(dc.code.independent_generators().size(), 6u);

  const auto rc = reversible_complement_dna_code(seed, 3, 0, SetVariant::S, b);
  EXPECT_EQ(rc.code.dim4(), 7u);
  EXPECT_TRUE(rc.code.is_complement_closed());
  EXPECT_TRUE(rc.code.contains(DnaWord("CACCCACCAACCAAACCCAAA")));
}

TEST(Dna, MapCodeDistancesMatchOracle) {
  const auto b = make_dna_basis(2);
  revcodes::testing::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = revcodes::testing::uniform(rng, 2, 5), m = revcodes::testing::uniform(rng, 0, n - 1);
    const auto blocks = revcodes::testing::random_dna_quasi_reciprocal(rng, 2, n, m);
    const auto seed = b.zeta_bar(DnaWord(revcodes::testing::concat(blocks)));
    const auto dc = reversible_dna_code(seed, m, 0, SetVariant::S, b);
    const auto& words = *dc.words;
    std::size_t dna = SIZE_MAX, sym = SIZE_MAX;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].str() == std::string(2 * n, 'A')) continue;
      std::size_t w = 0, s = 0;
      for (std::size_t j = 0; j < 2 * n; ++j) w += words[i][j] != 'A';
      for (std::size_t j = 0; j < 2 * n; j += 2) s += words[i][j] != 'A' || words[i][j + 1] != 'A';
      dna = std::min(dna, w);
      sym = std::min(sym, s);
    }
    EXPECT_EQ(dc.code.dna_distance(1), dna);
    EXPECT_EQ(dc.code.symbol_distance(2), sym);
  }
}

TEST(Dna, MapCodeClosureProperties) {
  const auto rev = revcodes::testing::map_code_closure(10, 200, false);
  EXPECT_EQ(rev.trials, 200u);
  EXPECT_TRUE(rev.ok()) << rev.first_failure;
  const auto comp = revcodes::testing::map_code_closure(11, 200, true);
  EXPECT_TRUE(comp.ok()) << comp.first_failure;
}

TEST(Dna, DnaCodeErrors) {
  const auto b = make_dna_basis(3);
  const auto bad = b.zeta_bar(DnaWord("TTTAAATTTTAAATAATAAAC"));
  EXPECT_THROW(reversible_dna_code(bad, 3, 0, SetVariant::S, b), VariantPreconditionError);
  const auto zero = b.zeta_bar(DnaWord("AAAAAA"));
  EXPECT_THROW(reversible_dna_code(zero, 0, 0, SetVariant::S, b), ValidationError);
  const auto seed = b.zeta_bar(DnaWord("TTTAAATTTTAAATAATAAAT"));
  EXPECT_THROW(reversible_dna_code(seed, 3, 0, SetVariant::S, b, {true, 100}), TooLargeError);
  EXPECT_NO_THROW(reversible_dna_code(seed, 3, 0, SetVariant::S, b, {false, 100}));
  const auto gf4_word = parse_codeword(canonical_field(4), "1,1");
  EXPECT_THROW(reversible_dna_code(gf4_word, 0, 0, SetVariant::S, b), FieldMismatchError);
}

TEST(Dna, ConstraintChecks) {
  const std::vector<DnaWord> pair{DnaWord("ACG"), DnaWord("GCA")};
  const auto r = check_constraints(pair, 1);
  EXPECT_TRUE(r.hamming.pass);
  EXPECT_FALSE(r.reverse.pass);  // ACG reversed is GCA
  EXPECT_TRUE(r.fixed_gc);

  const std::vector<DnaWord> pal{DnaWord("ACA")};
  EXPECT_FALSE(check_constraints(pal, 1).reverse.pass);
  EXPECT_EQ(check_constraints(pal, 1).reverse.violations,
            (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}}));

  const std::vector<DnaWord> gc{DnaWord("AG"), DnaWord("AA")};
  const auto g = check_constraints(gc, 1);
  EXPECT_FALSE(g.fixed_gc);
  EXPECT_EQ(g.gc_counts, (std::vector<std::size_t>{1, 0}));

  EXPECT_THROW(check_constraints(std::vector<DnaWord>{}, 1), ValidationError);
  EXPECT_THROW(check_constraints(std::vector<DnaWord>{DnaWord("A"), DnaWord("AC")}, 1), ValidationError);
}

TEST(Dna, ConstraintChecksMatchDistanceTable) {
  revcodes::testing::Rng rng(31);
  std::vector<DnaWord> ws;
  for (int i = 0; i < 25; ++i) ws.emplace_back(revcodes::testing::random_kbase(rng, 6));
  const std::size_t d = 3;
  const auto r = check_constraints(ws, d);
  std::size_t ham = 0, rev = 0, rc = 0;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i; j < ws.size(); ++j) {
      std::size_t h = 0, hr = 0, hc = 0;
      for (std::size_t p = 0; p < 6; ++p) {
        h += ws[i][p] != ws[j][p];
        hr += ws[i][5 - p] != ws[j][p];
        hc += complement(ws[i][5 - p]) != ws[j][p];
      }
      ham += i != j && h < d;
      rev += hr < d;
      rc += hc < d;
    }
  EXPECT_EQ(r.hamming.violations.size(), ham);
  EXPECT_EQ(r.reverse.violations.size(), rev);
  EXPECT_EQ(r.reverse_complement.violations.size(), rc);
}

TEST(Dna, ParseDnaLines) {
  const auto ws = parse_dna_lines(">header\nACGT\n\n# note\n  TTGA \n");
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[1].str(), "TTGA");
  EXPECT_THROW(parse_dna_lines("ACGX\n"), ValidationError);
}
