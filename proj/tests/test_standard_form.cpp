// Copyright 2026 The quditstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gtest/gtest.h"
#include "quditstab.hpp"
#include "support/random_stabilizer.hpp"

using namespace quditstab;
namespace qt = quditstab::testing;

namespace {

StabilizerPresentation S(Int d, std::size_t n, std::vector<const char*> texts) {
  std::vector<PauliProduct> gens;
  for (const char* t : texts) gens.push_back(parse_pauli(t, Modulus(d), n));
  return StabilizerPresentation::from_generators(gens);
}

void expect_sound(const StandardForm& sf) {
  const auto check = check_standard_invariants(sf);
  EXPECT_TRUE(check.ok) << (check.failures.empty() ? "" : check.failures.front());
  EXPECT_EQ(replay(sf), sf.result);
  EXPECT_TRUE(is_valid(sf.result).valid());
  EXPECT_EQ(group_order(sf.result), group_order(sf.input));
}

}  // namespace

TEST(standard_form, two_generator_example) {
  const auto sf = standardize(S(4, 2, {"w^2 X1^3 Z2^2", "X2^2"}));
  expect_sound(sf);
  EXPECT_EQ(sf.r, 2u);
  EXPECT_EQ(sf.m, Matrix(2, 2, Modulus(4), {{1, 0}, {0, 2}}));
  const auto v = oracle::verify_standard_form(sf);
  EXPECT_TRUE(v.pass) << (v.notes.empty() ? "" : v.notes[0]);
}

TEST(standard_form, x2_z2_d4_already_standard) {
  const auto s = S(4, 1, {"X1^2", "Z1^2"});
  const auto sf = standardize(s);
  expect_sound(sf);
  EXPECT_TRUE(sf.already_standard());
  EXPECT_EQ(sf.r, 1u);
  EXPECT_EQ(sf.m, Matrix(1, 1, Modulus(4), {{2}}));
  EXPECT_EQ(sf.z2, Matrix(1, 1, Modulus(4), {{2}}));
  EXPECT_EQ(sf.z4.cols(), 0u);
  EXPECT_EQ(sf.result, s);
}

TEST(standard_form, zero_x_block_gives_r_zero) {
  const auto sf = standardize(S(6, 2, {"Z1^2 Z2^3"}));
  expect_sound(sf);
  EXPECT_EQ(sf.r, 0u);
  EXPECT_EQ(sf.m.rows(), 0u);
  EXPECT_TRUE(sf.z4.is_diagonal());
  EXPECT_EQ(sf.z4(0, 0), 1);
}

TEST(standard_form, identity_generator) {
  const auto sf = standardize(S(3, 2, {"I"}));
  expect_sound(sf);
  EXPECT_EQ(sf.r, 0u);
  EXPECT_TRUE(sf.already_standard());
}

TEST(standard_form, invalid_input_rejected) {
  EXPECT_THROW(standardize(S(3, 1, {"X1", "Z1"})), InvalidStabilizer);
  EXPECT_THROW(standardize(S(2, 1, {"X1 Z1"})), InvalidStabilizer);
}

TEST(standard_form, tampered_z2_fails_invariants) {
  const auto sf = standardize(S(4, 1, {"X1^2", "Z1^2"}));
  const auto bad_result = sf.result.with_generator(1, parse_pauli("Z1", Modulus(4), 1));
  const auto bad = extract_standard_form(bad_result, sf.r, sf.input);
  const auto check = check_standard_invariants(bad);
  EXPECT_FALSE(check.ok);
  ASSERT_FALSE(check.failures.empty());
  EXPECT_EQ(check.failures.front(), "Z2*M != 0 mod D");

  auto stale = sf;
  stale.z1.set(0, 0, 1);
  EXPECT_FALSE(check_standard_invariants(stale).ok);
}

TEST(standard_form, tampered_x_block_fails_invariants) {
  const auto sf = standardize(S(4, 2, {"w^2 X1^3 Z2^2", "X2^2"}));
  const auto bad_result = sf.result.with_generator(1, parse_pauli("X1 X2^2", Modulus(4), 2));
  EXPECT_FALSE(check_standard_invariants(extract_standard_form(bad_result, sf.r, sf.input)).ok);
}

// For prime D every nonzero divisor is 1: M is the identity and Z4 is a
// 0/1 diagonal, the familiar qubit/prime-qudit standard form.
TEST(standard_form, prime_dimension_reduction) {
  qt::Rng rng(50);
  for (Int d : {2, 3, 5, 7}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int t = 0; t < 25; ++t) {
        const auto s = qt::random_valid_presentation(rng, d, n);
        const auto sf = standardize(s);
        expect_sound(sf);
        ASSERT_EQ(sf.m, Matrix::identity(sf.r, Modulus(d)));
        ASSERT_EQ(sf.z1, sf.z1.transpose());
        ASSERT_TRUE(sf.z2.is_zero());
        for (std::size_t i = 0; i < std::min(sf.z4.rows(), sf.z4.cols()); ++i)
          ASSERT_TRUE(sf.z4(i, i) == 0 || sf.z4(i, i) == 1);
      }
    }
  }
}

TEST(standard_form, random_presentations_checked_by_oracle) {
  qt::Rng rng(51);
  int runs = 0;
  for (const auto& shape : qt::shapes({2, 3, 4, 6, 8, 9, 12}, 3, 256)) {
    for (int t = 0; t < 12; ++t) {
      const auto s = qt::random_valid_presentation(rng, shape.d, shape.n);
      const auto sf = standardize(s);
      expect_sound(sf);
      const auto v = oracle::verify_standard_form(sf);
      ASSERT_TRUE(v.pass) << format_stabilizer_file(s) << (v.notes.empty() ? "" : v.notes[0]);
      ++runs;
    }
  }
  EXPECT_GE(runs, 150);
}

TEST(standard_form, larger_presentations_without_dense_check) {
  qt::Rng rng(52);
  for (Int d : {4, 6, 12, 30})
    for (std::size_t n : {4u, 5u, 6u}) {
      const auto sf = standardize(qt::random_valid_presentation(rng, d, n));
      expect_sound(sf);
    }
}

TEST(standard_form, standardizing_twice_is_stable) {
  qt::Rng rng(53);
  for (Int d : {4, 6, 8}) {
    for (int t = 0; t < 20; ++t) {
      const auto sf = standardize(qt::random_valid_presentation(rng, d, 3));
      const auto again = standardize(sf.result);
      EXPECT_TRUE(again.already_standard()) << transcript(again);
      EXPECT_EQ(again.result, sf.result);
    }
  }
}

TEST(standard_form, transcript_round_trip) {
  qt::Rng rng(54);
  for (Int d : {3, 4, 6}) {
    const auto sf = standardize(qt::random_valid_presentation(rng, d, 3));
    const auto text = transcript(sf);
    EXPECT_EQ(parse_transcript_result(text), sf.result);
    EXPECT_NE(text.find("invariants: ok"), std::string::npos);
  }
  const auto sf = standardize(S(4, 1, {"X1^2", "Z1^2"}));
  EXPECT_NE(transcript(sf).find("none, already standard"), std::string::npos);
  EXPECT_THROW(parse_transcript_result("no markers"), SyntaxError);
}
