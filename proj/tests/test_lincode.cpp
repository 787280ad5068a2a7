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

#include "revcodes/lincode.hpp"
#include "support/properties.hpp"

using namespace revcodes;

namespace {

Codeword word(std::uint32_t q, const char* text) { return parse_codeword(canonical_field(q), text); }

}  // namespace

TEST(LinearCode, SpanAndMembership) {
  const auto code = LinearCode::span({word(4, "1,1,0,0"), word(4, "0,0,1,1"), word(4, "1,1,1,1")});
  EXPECT_EQ(code.k(), 2u);
  EXPECT_EQ(code.size(), 16u);
  EXPECT_TRUE(code.contains(word(4, "w,w,w^2,w^2")));
  EXPECT_FALSE(code.contains(word(4, "1,0,0,0")));
  EXPECT_FALSE(code.contains(word(4, "1,1,0")));
  EXPECT_EQ(code.pivots(), (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(LinearCode::span(std::span<const Codeword>{}), ValidationError);
}

TEST(LinearCode, BasisIndependentOfGeneratorOrder) {
  const auto a = word(9, "1,w,0,w^3,1"), b = word(9, "0,1,w^5,1,w"), c = word(9, "w,0,1,1,0");
  const auto x = LinearCode::span({a, b, c});
  const auto y = LinearCode::span({c, a, b, a + b});
  EXPECT_EQ(x.basis(), y.basis());
}

TEST(LinearCode, EncodeAndEnumerate) {
  const auto code = LinearCode::span({word(3, "1,0,2"), word(3, "0,1,1")});
  EXPECT_EQ(code.encode(std::vector<Elem>{2, 1}), word(3, "2,1,2"));
  EXPECT_THROW(code.encode(std::vector<Elem>{1}), ValidationError);
  const auto all = code.enumerate(9);
  EXPECT_EQ(all.size(), 9u);
  for (const auto& w : all) EXPECT_TRUE(code.contains(w));
  EXPECT_THROW(code.enumerate(8), TooLargeError);
}

TEST(LinearCode, Reversibility) {
  EXPECT_TRUE(LinearCode::span({word(4, "1,w,w^2"), word(4, "w^2,w,1")}).is_reversible());
  EXPECT_FALSE(LinearCode::span({word(4, "1,w,0")}).is_reversible());
}

TEST(LinearCode, KnownDistances) {
  // repetition and parity codes
  EXPECT_EQ(LinearCode::span({word(2, "1,1,1,1,1")}).min_distance(), 5u);
  EXPECT_EQ(LinearCode::span({word(2, "1,1,0"), word(2, "0,1,1")}).min_distance(), 2u);
  // [7,4,3] Hamming code
  const auto ham = LinearCode::span({word(2, "1,0,0,0,1,1,0"), word(2, "0,1,0,0,0,1,1"), word(2, "0,0,1,0,1,1,1"),
                                     word(2, "0,0,0,1,1,0,1")});
  EXPECT_EQ(ham.min_distance(), 3u);
  EXPECT_EQ(ham.min_block_distance(7), 1u);
}

TEST(LinearCode, ZeroCodeHasNoDistance) {
  const auto z = LinearCode::span({word(4, "0,0,0")});
  EXPECT_EQ(z.k(), 0u);
  EXPECT_THROW(z.min_distance(), UndefinedDistanceError);
  EXPECT_THROW(LinearCode::span({word(4, "1,0,0")}).min_block_distance(2), ValidationError);
}

TEST(LinearCode, MinDistanceMatchesBruteForce) {
  const auto r = revcodes::testing::min_distance_oracle(7, 300);
  EXPECT_GE(r.trials, 400u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(LinearCode, MinDistanceIndependentOfWorkers) {
  const auto f = canonical_field(16);
  revcodes::testing::Rng rng(3);
  std::vector<Codeword> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(revcodes::testing::random_word(rng, f, 10));
  const auto code = LinearCode::span(gens);
  const auto base = code.min_block_distance(1, 1);
  for (unsigned w : {2u, 3u, 5u, 16u, 0u}) EXPECT_EQ(code.min_block_distance(1, w), base);
}

TEST(LinearCode, GriesmerSum) {
  EXPECT_EQ(griesmer_sum(4, 6, 64), 9u);
  EXPECT_EQ(griesmer_sum(2, 8, 4), 10u);
  EXPECT_EQ(griesmer_sum(3, 7, 4), 10u);
  EXPECT_EQ(griesmer_sum(5, 4, 27), 8u);
  EXPECT_EQ(griesmer_check(9, 4, 6, 64), GriesmerStatus::met_exactly);
  EXPECT_EQ(griesmer_check(11, 2, 8, 4), GriesmerStatus::satisfied_strictly);
  EXPECT_EQ(to_string(GriesmerStatus::met_exactly), "met");
  EXPECT_EQ(to_string(GriesmerStatus::satisfied_strictly), "strict");
  EXPECT_THROW(griesmer_check(5, 3, 5, 2), InternalInconsistencyError);
  EXPECT_THROW(griesmer_check(5, 0, 1, 2), ValidationError);
}

TEST(LinearCode, GriesmerSumMatchesCeilingOracle) {
  for (std::uint64_t q : {2u, 3u, 4u, 64u})
    for (std::uint64_t k = 1; k <= 8; ++k)
      for (std::uint64_t d = 1; d <= 40; ++d) {
        std::uint64_t sum = 0;
        long double qi = 1;
        for (std::uint64_t i = 0; i < k; ++i, qi *= q) sum += static_cast<std::uint64_t>(std::ceil(d / qi));
        EXPECT_EQ(griesmer_sum(k, d, q), sum);
      }
}

TEST(LinearCode, MdsClass) {
  EXPECT_EQ(mds_class(9, 4, 6), MdsClass::mds);
  EXPECT_EQ(mds_class(9, 5, 4), MdsClass::almost_mds);
  EXPECT_EQ(mds_class(11, 2, 8), MdsClass::neither);
  EXPECT_EQ(to_string(MdsClass::almost_mds), "almost-MDS");
  EXPECT_EQ(to_string(MdsClass::neither), "-");
}

TEST(LinearCode, ShiftCodesFromQuasiReciprocalSeedsAreReversible) {
  revcodes::testing::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = revcodes::testing::property_fields()[revcodes::testing::uniform(rng, 0, 10)];
    const auto f = canonical_field(q);
    const std::size_t n = revcodes::testing::uniform(rng, 2, 12);
    const std::size_t m = revcodes::testing::uniform(rng, 0, n - 1);
    const auto vs = revcodes::testing::admissible_variants(n, m);
    const auto v = vs[revcodes::testing::uniform(rng, 0, vs.size() - 1)];
    const auto c = revcodes::testing::random_quasi_reciprocal(rng, f, n, m);
    const auto code = LinearCode::span(build_generating_set(c, m, revcodes::testing::uniform(rng, 0, 3), v));
    EXPECT_TRUE(code.is_reversible());
    // oracle: reversal of every enumerated codeword when small
    if (code.size() <= 4096) {
      for (const auto& w : code.enumerate(4096)) EXPECT_TRUE(code.contains(reverse(w)));
    }
  }
}
