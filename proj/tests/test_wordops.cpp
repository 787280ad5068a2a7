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

#include "revcodes/wordops.hpp"
#include "support/properties.hpp"

using namespace revcodes;
using revcodes::testing::Rng;

namespace {

Codeword word(std::uint32_t q, const char* text) { return parse_codeword(canonical_field(q), text); }

}  // namespace

TEST(Wordops, CodewordBasics) {
  const auto c = word(4, "1,0,w,w^2");
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.weight(), 3u);
  EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(format_codeword(c), "1,0,w,w^2");
  EXPECT_EQ(c + c, Codeword::zeros(c.field(), 4));
  EXPECT_EQ(c.scaled(0), Codeword::zeros(c.field(), 4));
  EXPECT_THROW(Codeword(c.field(), {}), ValidationError);
  EXPECT_THROW(Codeword(c.field(), {0, 4}), ValidationError);
  EXPECT_THROW((void)(c + word(4, "1,1")), ValidationError);
  EXPECT_THROW((void)(c + word(8, "1,1,1,1")), FieldMismatchError);
}

TEST(Wordops, CyclicShiftIsRightShift) {
  const auto c = word(5, "1,2,3,4");
  EXPECT_EQ(format_codeword(cyclic_shift(c, 1)), format_codeword(word(5, "4,1,2,3")));
  EXPECT_EQ(cyclic_shift(c, -1), word(5, "2,3,4,1"));
  EXPECT_EQ(cyclic_shift(c, 4), c);
  EXPECT_EQ(cyclic_shift(c, -9), cyclic_shift(c, 3));
  EXPECT_EQ(reverse(c), word(5, "4,3,2,1"));
}

TEST(Wordops, ShiftGroupLaws) {
  Rng rng(11);
  const auto f = canonical_field(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = revcodes::testing::uniform(rng, 1, 12);
    const auto c = revcodes::testing::random_word(rng, f, n);
    const long long i = static_cast<long long>(revcodes::testing::uniform(rng, 0, 40)) - 20;
    const long long j = static_cast<long long>(revcodes::testing::uniform(rng, 0, 40)) - 20;
    EXPECT_EQ(cyclic_shift(cyclic_shift(c, i), j), cyclic_shift(c, i + j));
    EXPECT_EQ(cyclic_shift(c, static_cast<long long>(n)), c);
    EXPECT_EQ(reverse(reverse(c)), c);
    // reversal conjugates a shift to its inverse
    EXPECT_EQ(reverse(cyclic_shift(c, i)), cyclic_shift(reverse(c), -i));
  }
}

TEST(Wordops, QuasiReciprocalPredicate) {
  EXPECT_TRUE(is_m_quasi_reciprocal(word(64, "w^2,w^2,1,1,w,0,w,1,1"), 2));
  EXPECT_FALSE(is_m_quasi_reciprocal(word(64, "w^2,w^2,1,1,w,0,w,1,1"), 0));
  EXPECT_TRUE(is_m_quasi_reciprocal(word(4, "1,0,1"), 0));  // self-reciprocal
  EXPECT_TRUE(is_m_quasi_reciprocal(word(4, "1,1,w,0,w"), 2));
  EXPECT_THROW(is_m_quasi_reciprocal(word(4, "1,1,w"), 3), ValidationError);
}

TEST(Wordops, ShiftReverseIdentityProperty) {
  const auto r = revcodes::testing::shift_reverse_identity(2026, 400);
  EXPECT_GE(r.trials, 400u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Wordops, VariantFixedPoints) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = revcodes::testing::uniform(rng, 2, 14);
    const std::size_t m = revcodes::testing::uniform(rng, 0, n - 1);
    const auto f = canonical_field(8);
    const auto c = revcodes::testing::random_quasi_reciprocal(rng, f, n, m);
    const auto N = static_cast<long long>(n), M = static_cast<long long>(m);
    auto fixed = [&](long long s) { return reverse(cyclic_shift(c, s)) == cyclic_shift(c, s); };
    if (m == 0 && n % 2 == 0) {
      EXPECT_TRUE(fixed(N / 2));
    }
    if (m % 2 == 0) {
      EXPECT_TRUE(fixed(-M / 2));
    }
    if ((n - m) % 2 == 0) {
      EXPECT_TRUE(fixed((N - M) / 2));
    }
  }
}

TEST(Wordops, GeneratingSetExponents) {
  EXPECT_EQ(generating_set_exponents(9, 2, 1, SetVariant::S), (std::vector<long long>{1, 0, -2, -3}));
  EXPECT_EQ(generating_set_exponents(9, 2, 1, SetVariant::E1), (std::vector<long long>{1, 0, -2, -3, -1}));
  EXPECT_EQ(generating_set_exponents(11, 3, 0, SetVariant::E2), (std::vector<long long>{0, -3, 4}));
  EXPECT_EQ(generating_set_exponents(6, 0, 0, SetVariant::E), (std::vector<long long>{0, 0, 3}));
  EXPECT_EQ(generating_set_exponents(10, 2, 0, SetVariant::E3), (std::vector<long long>{0, -2, -1, 4}));
  EXPECT_EQ(generating_set_exponents(3, 0, 50, SetVariant::S).size(), 8u);  // t capped at n
}

TEST(Wordops, VariantPreconditions) {
  EXPECT_THROW(check_variant_preconditions(7, 1, SetVariant::E), VariantPreconditionError);
  EXPECT_THROW(check_variant_preconditions(7, 0, SetVariant::E), VariantPreconditionError);
  EXPECT_THROW(check_variant_preconditions(9, 3, SetVariant::E1), VariantPreconditionError);
  EXPECT_THROW(check_variant_preconditions(9, 2, SetVariant::E2), VariantPreconditionError);
  EXPECT_THROW(check_variant_preconditions(9, 8, SetVariant::E2), VariantPreconditionError);  // m = n-1
  EXPECT_THROW(check_variant_preconditions(9, 0, SetVariant::E1), VariantPreconditionError);
  EXPECT_THROW(check_variant_preconditions(9, 9, SetVariant::S), VariantPreconditionError);
  EXPECT_NO_THROW(check_variant_preconditions(9, 8, SetVariant::S));
  try {
    check_variant_preconditions(9, 2, SetVariant::E2);
    FAIL();
  } catch (const VariantPreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("n-m even"), std::string::npos);
  }
  EXPECT_THROW(parse_variant("E4"), ParseError);
  for (auto v : {SetVariant::S, SetVariant::E, SetVariant::E1, SetVariant::E2, SetVariant::E3})
    EXPECT_EQ(parse_variant(to_string(v)), v);
}

TEST(Wordops, GeneratingSetClosedUnderReversal) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto q = revcodes::testing::property_fields()[revcodes::testing::uniform(rng, 0, 10)];
    const auto f = canonical_field(q);
    const std::size_t n = revcodes::testing::uniform(rng, 2, 13);
    const std::size_t m = revcodes::testing::uniform(rng, 0, n - 1);
    const auto variants = revcodes::testing::admissible_variants(n, m);
    const auto v = variants[revcodes::testing::uniform(rng, 0, variants.size() - 1)];
    const auto c = revcodes::testing::random_quasi_reciprocal(rng, f, n, m);
    const auto set = build_generating_set(c, m, revcodes::testing::uniform(rng, 0, 3), v);
    for (const auto& s : set) EXPECT_NE(std::find(set.begin(), set.end(), reverse(s)), set.end());
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) EXPECT_NE(set[i], set[j]);
  }
}

TEST(Wordops, GeneratingSetRejectsBadSeeds) {
  EXPECT_THROW(build_generating_set(word(4, "1,w,0,0,0"), 2, 0, SetVariant::S), VariantPreconditionError);
  EXPECT_THROW(build_generating_set(word(4, "0,0,0,0,0"), 2, 0, SetVariant::S), ValidationError);
  // pi^2 = pi^-3 on this word, so the t = 2 set drops duplicates
  const auto set = build_generating_set(word(4, "1,1,w,0,w"), 2, 2, SetVariant::S);
  EXPECT_LT(set.size(), 6u);
}
