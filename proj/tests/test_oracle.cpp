#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "vlg/oracle.hpp"

namespace vlg {
namespace {

TEST(Oracle, NaiveOccurrences) {
  EXPECT_EQ(oracle::naive_occurrences("CC", test::kExampleText), (std::vector<Position>{9, 14, 20, 21, 26}));
  EXPECT_TRUE(oracle::naive_occurrences("X", "YYY").empty());
  EXPECT_EQ(oracle::naive_occurrences("AA", "AAA"), (std::vector<Position>{2, 3}));
}

TEST(Oracle, RelevantOccurrences) {
  const auto rel = oracle::brute_force_relevant(parse_pattern(test::kExamplePattern), test::kExampleText);
  EXPECT_EQ(rel[0], (std::vector<Position>{1, 10, 12, 15, 18}));
  EXPECT_EQ(rel[1], (std::vector<Position>{9, 20, 21, 26}));  // CC ending at 14 is not relevant
  EXPECT_EQ(rel[2], (std::vector<Position>{17, 28, 31}));
}

TEST(Oracle, Endpoints) {
  EXPECT_EQ(oracle::brute_force_endpoints(parse_pattern(test::kExamplePattern), test::kExampleText),
            (std::vector<Position>{17, 28, 31}));
  EXPECT_TRUE(oracle::brute_force_endpoints(parse_pattern(test::kExamplePattern), "").empty());
  EXPECT_EQ(oracle::brute_force_endpoints(parse_pattern("A.{0,*}B"), "xAyyyyB"), (std::vector<Position>{7}));
}

TEST(Oracle, CombinationsOfFigureMatch) {
  const auto combos = oracle::brute_force_combinations(parse_pattern(test::kCombinationPattern), test::kExampleText);
  std::set<std::vector<Position>> at17;
  std::size_t ending_at_17 = 0;
  for (const auto& c : combos) {
    if (c.back() != 17) continue;
    ++ending_at_17;
    if (c.front() >= 5) at17.insert(c);  // inside the substring 5..17
  }
  EXPECT_EQ(ending_at_17, 9u);
  EXPECT_EQ(at17, (std::set<std::vector<Position>>{
                      {5, 9, 12, 17}, {5, 8, 12, 17}, {5, 8, 10, 17}, {5, 6, 12, 17}, {5, 6, 10, 17}}));
  EXPECT_TRUE(oracle::brute_force_combinations(parse_pattern("A.{0,1}C"), "").empty());
}

TEST(Oracle, Limits) {
  EXPECT_THROW(oracle::brute_force_endpoints(parse_pattern("A"), std::string(10'001, 'A')), oracle::OracleLimitError);
  // 300 A's against A.{0,30}A.{0,30}A.{0,30}A.{0,30}A: far beyond 10^7.
  EXPECT_THROW(oracle::brute_force_combinations(parse_pattern("A.{0,30}A.{0,30}A.{0,30}A.{0,30}A"),
                                                std::string(300, 'A')),
               oracle::OracleLimitError);
}

// Projections agree: the relevant layer-k set equals the endpoint set, and
// every combination's entries are relevant occurrences.
TEST(Oracle, InternalConsistencyProperty) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    const test::Instance inst = test::random_instance(rng);
    const VlgPattern& p = inst.pattern;
    const auto rel = oracle::brute_force_relevant(p, inst.text);
    const auto ends = oracle::brute_force_endpoints(p, inst.text);
    ASSERT_EQ(rel.back(), ends) << inst.describe();
    std::set<Position> projected;
    for (const auto& c : oracle::brute_force_combinations(p, inst.text)) {
      projected.insert(c.back());
      for (std::size_t i = 0; i < c.size(); ++i) {
        ASSERT_TRUE(std::binary_search(rel[i].begin(), rel[i].end(), c[i])) << inst.describe();
      }
    }
    ASSERT_EQ(std::vector<Position>(projected.begin(), projected.end()), ends) << inst.describe();
  }
}

}  // namespace
}  // namespace vlg
