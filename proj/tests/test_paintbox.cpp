#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "stabsign/paintbox.hpp"
#include "stabsign/sign_mc.hpp"

namespace {

namespace pb = stabsign::paintbox;
using stabsign::ExactRational;

TEST(Recursion, HandSteps) {
  EXPECT_EQ(pb::all_even_probability(0), ExactRational(1));
  EXPECT_EQ(pb::all_even_probability(2), ExactRational(1, 3));
  EXPECT_EQ(pb::all_even_probability(4), ExactRational(1, 5));
  EXPECT_EQ(pb::all_even_probability(3), ExactRational(0));
}

TEST(Recursion, ExactLawUpToForty) {
  const auto p = pb::all_even_probabilities(40);
  for (unsigned n = 0; n <= 40; ++n) {
    EXPECT_EQ(p[n], n % 2 ? ExactRational(0) : ExactRational(1, n + 1)) << n;
  }
}

TEST(Recursion, ExactAtTwoHundred) {
  EXPECT_EQ(pb::all_even_probability(200), ExactRational(1, 201));
  EXPECT_THROW(pb::all_even_probability(201), std::invalid_argument);
}

// Independent oracle: P(all box counts even) = E_sigma[(sum_j sigma_j q_j)^n]
// with sigma uniform on {-1,1}^J, enumerated over J = 18 boxes plus the tail.
TEST(Recursion, MatchesSignEnumeration) {
  constexpr int kBoxes = 18;
  const double tail = std::ldexp(1.0, -kBoxes);
  for (unsigned n : {2u, 4u, 6u, 8u, 10u}) {
    double acc = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << (kBoxes + 1)); ++mask) {
      double s = 0.0;
      for (int j = 0; j < kBoxes; ++j) s += ((mask >> j) & 1u ? 1.0 : -1.0) * std::ldexp(1.0, -(j + 1));
      s += ((mask >> kBoxes) & 1u ? 1.0 : -1.0) * tail;
      acc += std::pow(s, n);
    }
    acc /= static_cast<double>(1u << (kBoxes + 1));
    EXPECT_NEAR(acc, stabsign::to_double(pb::all_even_probability(n)), 1e-4) << n;
  }
}

TEST(Rational, ToString) {
  EXPECT_EQ(stabsign::to_string(ExactRational(2, 6)), "1/3");
  EXPECT_EQ(stabsign::to_string(ExactRational(0)), "0");
  EXPECT_EQ(stabsign::binomial(10, 4), 210);
}

TEST(AllBlocksEven, Examples) {
  EXPECT_TRUE(pb::all_blocks_even(std::vector<unsigned>{1, 1}));
  EXPECT_FALSE(pb::all_blocks_even(std::vector<unsigned>{1, 2, 2}));
  EXPECT_TRUE(pb::all_blocks_even(std::vector<unsigned>{3, 1, 3, 1}));
}

TEST(Sample, ValuesFollowBoxColours) {
  stabsign::RngStream rng(4, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto s = pb::sample_paintbox(7, rng);
    for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(s.values[k], s.color_of_box(s.box_of[k]));
  }
}

TEST(Sample, SingleBoxGivesConstantValues) {
  stabsign::RngStream rng(4, 1);
  for (int i = 0; i < 100; ++i) {
    const auto s = pb::sample_paintbox(9, rng, pb::Kind::SingleBox);
    for (int v : s.values) EXPECT_EQ(v, s.values[0]);
  }
}

TEST(Sample, BoxLawIsGeometric) {
  constexpr int kDraws = 1'000'000;
  stabsign::RngStream rng(12, 0);
  std::map<unsigned, int> freq;
  for (int i = 0; i < kDraws; ++i) ++freq[pb::draw_box(rng)];
  for (unsigned j = 1; j <= 8; ++j) {
    const double p = std::ldexp(1.0, -static_cast<int>(j));
    EXPECT_NEAR(freq[j] / double(kDraws), p, 4.0 * std::sqrt(p / kDraws)) << j;
  }
}

TEST(Simulation, PairAgreementProbabilityIsTwoThirds) {
  // P(same box) = sum 4^-j = 1/3; P(V1 = V2) = 1/3 + (2/3)(1/2).
  constexpr int kDraws = 1'000'000;
  stabsign::RngStream rng(13, 0);
  int same = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto s = pb::sample_paintbox(2, rng);
    same += s.values[0] == s.values[1];
  }
  const double p = same / double(kDraws);
  EXPECT_NEAR(p, 2.0 / 3.0, 3.0 * std::sqrt(2.0 / 9.0 / kDraws));
}

TEST(Simulation, AllEvenFrequencyMatchesRecursion) {
  for (unsigned n : {2u, 4u, 6u, 8u}) {
    const auto e = pb::estimate_all_even_frequency(n, 1'000'000, 500 + n);
    const double exact = stabsign::to_double(pb::all_even_probability(n));
    EXPECT_LE(std::abs(e.mean - exact), 3.0 * std::sqrt(exact * (1 - exact) / 1e6)) << n;
  }
  EXPECT_EQ(pb::estimate_all_even_frequency(5, 100'000, 1).mean, 0.0);
}

TEST(Simulation, ProductMomentMatchesStableSigns) {
  for (unsigned n : {2u, 4u}) {
    const auto box = pb::estimate_product_moment(n, 1'000'000, 600 + n);
    for (double a : {0.6, 1.4}) {
      const auto stable = stabsign::estimate_n_product(stabsign::Alpha(a), n, 1'000'000, 700 + n);
      EXPECT_LE(std::abs(box.mean - stable.mean), 3.0 * stabsign::combined_std_error(box, stable));
    }
  }
}

TEST(KsDistance, KnownValues) {
  EXPECT_NEAR(pb::ks_distance_uniform({0.5}), 0.5, 1e-15);
  EXPECT_NEAR(pb::ks_distance_uniform({0.0, 1.0}), 0.5, 1e-15);
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back((i + 0.5) / 100);
  EXPECT_NEAR(pb::ks_distance_uniform(grid), 0.005, 1e-12);
}

TEST(DeFinetti, MixingMeasureIsUniform) {
  const double d = pb::definetti_uniformity_stat(10'000, 10'000, 77);
  EXPECT_LE(d, pb::kUniformityThreshold);
}

TEST(DeFinetti, SingleBoxControlIsFarFromUniform) {
  const double d = pb::definetti_uniformity_stat(10'000, 10'000, 77, pb::Kind::SingleBox);
  EXPECT_NEAR(d, 0.5, 0.05);
}

TEST(DeFinetti, BiasShrinksWithSequenceLength) {
  const double d10 = pb::definetti_uniformity_stat(10, 50'000, 78);
  const double d100 = pb::definetti_uniformity_stat(100, 50'000, 78);
  const double d10k = pb::definetti_uniformity_stat(10'000, 50'000, 78);
  EXPECT_GT(d10, d100);
  EXPECT_GT(d100, d10k);
}

TEST(DeFinetti, IndependentOfThreadCount) {
  EXPECT_EQ(pb::mixing_fractions(500, 3000, 5, pb::Kind::Geometric, {1}),
            pb::mixing_fractions(500, 3000, 5, pb::Kind::Geometric, {4}));
  EXPECT_THROW(pb::definetti_uniformity_stat(100, 999, 1), std::invalid_argument);
}

}  // namespace
