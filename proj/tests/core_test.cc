// Copyright 2026 The Consensus Division Authors
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


#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "consensus/json_io.h"
#include "consensus/rational.h"
#include "consensus/types.h"
#include "test_util.h"

namespace consensus {
namespace {

using testing::Inst;
using testing::Q;
using testing::QV;

TEST(RationalTest, ParseCanonicalizes) {
  Rational q = ParseRational("6/4");
  EXPECT_EQ(q.get_num(), 3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(ParseRational("-2/4"), ParseRational("-1/2"));
  EXPECT_EQ(ParseRational("+7"), 7);
  EXPECT_EQ(FormatRational(ParseRational("10/5")), "2");
  EXPECT_EQ(FormatRational(ParseRational("-3/9")), "-1/3");
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1 /2", "--1", "4/-8"}) {
    EXPECT_THROW(ParseRational(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, MakeRationalIsCanonical) {
  Rational q = MakeRational(4, 10);
  EXPECT_EQ(q.get_num(), 2);
  EXPECT_EQ(q.get_den(), 5);
  EXPECT_EQ(FormatRational(MakeRational(-6, 3)), "-2");
}

TEST(RationalTest, FormatParseRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
  std::uniform_int_distribution<unsigned long> den(1, 1000000000UL);
  for (int t = 0; t < 1000; ++t) {
    Rational q = MakeRational(num(rng), den(rng));
    EXPECT_EQ(ParseRational(FormatRational(q)), q);
  }
  Rational big = ParseRational("123456789012345678901234567890/7");
  EXPECT_EQ(ParseRational(FormatRational(big)), big);
}

TEST(InstanceTest, Validation) {
  EXPECT_THROW(Instance(RationalMatrix{}), std::invalid_argument);
  EXPECT_THROW(Inst({{"1", "2"}, {"1"}}), std::invalid_argument);
  EXPECT_THROW(Inst({{"1", "-2"}}), std::invalid_argument);
  EXPECT_NO_THROW(Inst({{"1", "-2"}}, true));
  Instance empty(2, 0, RationalMatrix(2));
  EXPECT_EQ(empty.num_items(), 0u);
  EXPECT_EQ(empty.Total(1), 0);
  EXPECT_THROW(Instance(2, 3, RationalMatrix(2, RationalVector(2))),
               std::invalid_argument);
}

TEST(FractionalSplitTest, Validation) {
  EXPECT_THROW(FractionalSplit(2, {QV({"1/2", "1/3"})}), std::invalid_argument);
  EXPECT_THROW(FractionalSplit(2, {QV({"3/2", "-1/2"})}), std::invalid_argument);
  EXPECT_THROW(FractionalSplit(2, {QV({"1"})}), std::invalid_argument);
  FractionalSplit s = FractionalSplit::FromFirstPart(QV({"1/4", "1"}));
  EXPECT_EQ(s.fraction(0, 1), Q("3/4"));
  EXPECT_EQ(s.Column(1), QV({"3/4", "0"}));
}

TEST(RatiosTest, Validation) {
  EXPECT_THROW(Ratios(QV({"1/2", "1/3"})), std::invalid_argument);
  EXPECT_THROW(Ratios(QV({"1", "0"})), std::invalid_argument);
  EXPECT_THROW(Ratios(RationalVector{}), std::invalid_argument);
  EXPECT_EQ(Ratios::Uniform(3)[2], Q("1/3"));
}

TEST(CutItemsTest, HalfItemIsCut) {
  FractionalSplit s = FractionalSplit::FromFirstPart(QV({"1/2"}));
  EXPECT_EQ(CutItems(s), std::vector<std::size_t>{0});
}

TEST(CutItemsTest, IntegralSplitHasNoCuts) {
  FractionalSplit s = FractionalSplit::FromFirstPart(QV({"1", "0", "1"}));
  EXPECT_TRUE(CutItems(s).empty());
  EXPECT_EQ(CutCount(s), 0u);
}

TEST(CutItemsTest, ThreeWayRowCountsOnceAsItemTwiceAsCuts) {
  FractionalSplit s(3, {QV({"1/3", "1/3", "1/3"})});
  EXPECT_EQ(CutItems(s).size(), 1u);
  EXPECT_EQ(CutCount(s), 2u);
}

TEST(CutCountTest, OneHalfItem) {
  FractionalSplit s = FractionalSplit::FromFirstPart(QV({"1/2", "0", "1"}));
  EXPECT_EQ(CutCount(s), 1u);
}

TEST(CutCountTest, AtLeastCutItems) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> w(0, 2);
  for (int t = 0; t < 200; ++t) {
    std::size_t k = 2 + t % 3;
    RationalMatrix rows;
    for (int j = 0; j < 5; ++j) {
      RationalVector weights(k);
      Rational sum = 0;
      for (auto& v : weights) sum += (v = w(rng));
      if (sum == 0) {
        weights[0] = 1;
        sum = 1;
      }
      for (auto& v : weights) v /= sum;
      rows.push_back(weights);
    }
    FractionalSplit s(k, rows);
    EXPECT_GE(CutCount(s), CutItems(s).size());
    if (k == 2) {
      EXPECT_EQ(CutCount(s), CutItems(s).size());
    }
  }
}

TEST(AdditiveValueTest, Examples) {
  Instance inst = Inst({{"1", "2", "3"}});
  EXPECT_EQ(AdditiveValue(inst, 0, QV({"1", "1", "1"})), 6);
  EXPECT_EQ(AdditiveValue(inst, 0, QV({"1/2", "1/2", "1/2"})), 3);
  Instance table = Inst({{"10", "2"}});
  EXPECT_EQ(AdditiveValue(table, 0, QV({"1", "0"})), 10);
  EXPECT_THROW(AdditiveValue(inst, 0, QV({"1"})), std::invalid_argument);
}

TEST(AdditiveValueTest, PartsSumToWhole) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Instance inst = testing::SmallRandomInstance(rng, 3, 6, -5, 9);
    std::uniform_int_distribution<int> d(0, 6);
    RationalVector x(6);
    for (auto& v : x) v = MakeRational(d(rng), 6);
    FractionalSplit s = FractionalSplit::FromFirstPart(x);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(AdditiveValue(inst, i, s.Column(0)) +
                    AdditiveValue(inst, i, s.Column(1)),
                inst.Total(i));
    }
  }
}

TEST(JsonTest, InstanceRoundTrip) {
  Instance inst = Inst({{"1/3", "-2", "0"}, {"5", "7/9", "1"}}, true);
  Json j = InstanceToJson(inst);
  EXPECT_EQ(j["utilities"][0][0], "1/3");
  Instance back = InstanceFromJson(Json::parse(j.dump()));
  EXPECT_EQ(back.utilities(), inst.utilities());
  EXPECT_TRUE(back.allow_negative());
}

TEST(JsonTest, InstanceErrors) {
  EXPECT_THROW(InstanceFromJson(Json::parse("[1]")), std::invalid_argument);
  EXPECT_THROW(InstanceFromJson(Json::parse(R"({"n":1,"m":1})")),
               std::invalid_argument);
  EXPECT_THROW(
      InstanceFromJson(Json::parse(R"({"n":1,"m":1,"utilities":[["x"]]})")),
      std::invalid_argument);
  EXPECT_THROW(
      InstanceFromJson(Json::parse(R"({"n":2,"m":1,"utilities":[["1"]]})")),
      std::invalid_argument);
  EXPECT_THROW(
      InstanceFromJson(Json::parse(R"({"n":1,"m":1,"utilities":[["-1"]]})")),
      std::invalid_argument);
}

TEST(JsonTest, SplitAndRatios) {
  FractionalSplit s(3, {QV({"1/3", "1/3", "1/3"}), QV({"0", "1", "0"})});
  FractionalSplit back = SplitFromJson(Json::parse(SplitToJson(s).dump()));
  EXPECT_EQ(back.fractions(), s.fractions());
  EXPECT_EQ(back.num_parts(), 3u);
  EXPECT_EQ(ParseRatios("1/3,1/3,1/3").values(), Ratios::Uniform(3).values());
  EXPECT_THROW(ParseRatios("1/3,1/3"), std::invalid_argument);
  EXPECT_THROW(ParseRatios("1/2,,1/2"), std::invalid_argument);
}

TEST(JsonTest, OracleSpecRoundTrip) {
  CoverageUtility cov{3, {CoverageAgent{QV({"1", "2"}), {{0}, {1}, {0, 1}}}}};
  Json j = OracleSpecToJson(cov);
  OracleSpec back = OracleSpecFromJson(Json::parse(j.dump()));
  ASSERT_TRUE(std::holds_alternative<CoverageUtility>(back));
  EXPECT_EQ(std::get<CoverageUtility>(back).agents[0].covers[2],
            (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(OracleSpecFromJson(Json::parse(R"({"kind":"nope"})")),
               std::invalid_argument);
  // A plain instance document is an additive spec.
  Json plain = InstanceToJson(Inst({{"1"}}));
  EXPECT_TRUE(std::holds_alternative<Instance>(OracleSpecFromJson(plain)));
}

}  // namespace
}  // namespace consensus
