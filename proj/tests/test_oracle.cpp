#include <doctest.h>

#include <random>
#include <set>

#include "depens/oracle.hpp"
#include "helpers.hpp"

using namespace depens;
using depens::testing::random_heads;

namespace {

// independent count: filter all (n+1)^n head assignments
std::size_t filter_count(int n) {
  std::size_t count = 0;
  HeadVector parse(n, 0);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= n + 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int j = 1; j <= n; ++j) {
      parse[j - 1] = static_cast<int>(c % (n + 1));
      c /= n + 1;
    }
    if (validate(parse, n).ok()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumeration counts match the independent filter") {
  CHECK(oracle::enumerate_projective_parses(1).size() == 1);
  CHECK(oracle::enumerate_projective_parses(2).size() == 2);
  CHECK(oracle::enumerate_projective_parses(3).size() == 7);
  for (int n = 1; n <= 5; ++n)
    CHECK(oracle::enumerate_projective_parses(n).size() == filter_count(n));
}

TEST_CASE("pinned enumeration counts for larger n") {
  // regression values, first derived from the filter oracle
  CHECK(oracle::enumerate_projective_parses(4).size() == 30);
  CHECK(oracle::enumerate_projective_parses(5).size() == 143);
  CHECK(oracle::enumerate_projective_parses(6).size() == 728);
  CHECK(oracle::enumerate_projective_parses(7).size() == 3876);
}

TEST_CASE("no duplicates in the enumeration") {
  for (int n = 1; n <= 6; ++n) {
    const auto parses = oracle::enumerate_projective_parses(n);
    const std::set<HeadVector> unique(parses.begin(), parses.end());
    CHECK(unique.size() == parses.size());
  }
}

TEST_CASE("guard range") {
  CHECK_THROWS(oracle::enumerate_projective_parses(0));
  CHECK_THROWS(oracle::enumerate_projective_parses(9));
}

TEST_CASE("brute-force UAS aggregate") {
  SUBCASE("single individual") {
    const HeadVector parse{2, 0, 2};
    const auto [best, score] =
        oracle::brute_force_uas_aggregate({parse}, {Rational{1}});
    CHECK(best == parse);
    CHECK(score == 3);
  }
  SUBCASE("the worked 3-individual case scores 7") {
    const auto [best, score] = oracle::brute_force_uas_aggregate(
        {{2, 0, 2}, {2, 0, 2}, {2, 3, 0}}, std::vector<Rational>(3, Rational{1}));
    CHECK(score == 7);
    CHECK(best == HeadVector{2, 0, 2});
  }
}

TEST_CASE("brute-force F1 aggregate") {
  const std::vector<Rational> w1{Rational{1}};
  SUBCASE("single individual") {
    const auto h = build_hit_counts({{2, 0, 2}}, w1);
    const auto [tree, score] = oracle::brute_force_f1_aggregate(h);
    CHECK(dpst_to_heads(tree) == HeadVector{2, 0, 2});
    CHECK(score == 3);
  }
  SUBCASE("duplicates double the score, same argmax") {
    const auto h1 = build_hit_counts({{2, 0, 2}}, w1);
    const auto h2 = build_hit_counts({{2, 0, 2}, {2, 0, 2}},
                                     std::vector<Rational>(2, Rational{1}));
    const auto [t1, s1] = oracle::brute_force_f1_aggregate(h1);
    const auto [t2, s2] = oracle::brute_force_f1_aggregate(h2);
    CHECK(s2 == 2 * s1);
    CHECK(dpst_to_heads(t1) == dpst_to_heads(t2));
  }
}
