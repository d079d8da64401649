#include <doctest.h>

#include <cmath>
#include <random>

#include "depens/diversity.hpp"
#include "helpers.hpp"

using namespace depens;
using depens::testing::make_corpus;
using depens::testing::random_heads;

namespace {

WordVotes votes_from(const std::vector<CorpusFile>& corpora, const CorpusFile* gold) {
  std::vector<const CorpusFile*> ptrs;
  for (const auto& c : corpora) ptrs.push_back(&c);
  return pool_words(ptrs, gold);
}

}  // namespace

TEST_CASE("society distribution") {
  const auto unanimous = society_distribution({2, 2, 2}, 3);
  CHECK(unanimous[2] == doctest::Approx(1.0));
  CHECK(unanimous[0] == doctest::Approx(0.0));

  const auto split = society_distribution({2, 2, 3}, 3);
  CHECK(split[2] == doctest::Approx(2.0 / 3.0));
  CHECK(split[3] == doctest::Approx(1.0 / 3.0));

  const auto uniform = society_distribution({0, 1, 2, 3}, 3);
  for (int a = 0; a <= 3; ++a) CHECK(uniform[a] == doctest::Approx(0.25));

  double sum = 0;
  for (double p : split) sum += p;
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("society entropy") {
  SUBCASE("identical individuals have zero entropy") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2}}), make_corpus({{2, 0, 2}})};
    CHECK(society_entropy(votes_from(corpora, nullptr)) == doctest::Approx(0.0));
  }
  SUBCASE("all-distinct heads reach ln K") {
    // K=4, single word; heads 0 and three others all distinct is impossible
    // on n=1, so use n=4 with each individual assigning a distinct head
    const std::vector<CorpusFile> corpora{
        make_corpus({{0, 1, 1, 1}}), make_corpus({{2, 0, 2, 2}}),
        make_corpus({{3, 3, 0, 3}}), make_corpus({{4, 4, 4, 0}})};
    CHECK(society_entropy(votes_from(corpora, nullptr)) == doctest::Approx(std::log(4.0)));
  }
  SUBCASE("direct formula on one word") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0}}), make_corpus({{2, 0}}),
                                          make_corpus({{0, 1}})};
    // word1 heads {2,2,0}: -(2/3)ln(2/3)-(1/3)ln(1/3); word2 heads {0,0,1}: same
    const double e = -(2.0 / 3.0) * std::log(2.0 / 3.0) - (1.0 / 3.0) * std::log(1.0 / 3.0);
    CHECK(society_entropy(votes_from(corpora, nullptr)) == doctest::Approx(e));
  }
  SUBCASE("log base 2 rescales") {
    const std::vector<CorpusFile> corpora{make_corpus({{0, 1}}), make_corpus({{2, 0}})};
    const auto v = votes_from(corpora, nullptr);
    CHECK(society_entropy(v, 2.0) == doctest::Approx(society_entropy(v) / std::log(2.0)));
  }
}

TEST_CASE("disagreement") {
  const auto gold = make_corpus({{2, 0, 2}});
  SUBCASE("all correct is zero") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2}}), make_corpus({{2, 0, 2}})};
    CHECK(disagreement(votes_from(corpora, &gold)) == doctest::Approx(0.0));
  }
  SUBCASE("one all-correct one all-wrong hits the 1/2 ceiling") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2}}), make_corpus({{0, 3, 1}})};
    CHECK(disagreement(votes_from(corpora, &gold)) == doctest::Approx(0.5));
  }
  SUBCASE("agreement in failure is zero") {
    const std::vector<CorpusFile> corpora{make_corpus({{0, 3, 1}}), make_corpus({{0, 3, 1}})};
    CHECK(disagreement(votes_from(corpora, &gold)) == doctest::Approx(0.0));
  }
}

TEST_CASE("KW variance and the printed-forms identity") {
  const auto gold = make_corpus({{2, 0, 2, 2}});
  SUBCASE("unanimous correctness is zero") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2, 2}}),
                                          make_corpus({{2, 0, 2, 2}})};
    CHECK(kw_variance(votes_from(corpora, &gold)) == doctest::Approx(0.0));
  }
  SUBCASE("K=2 split 1/1 on every word gives 1/4") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2, 2}}),
                                          make_corpus({{0, 3, 1, 1}})};
    CHECK(kw_variance(votes_from(corpora, &gold)) == doctest::Approx(0.25));
  }
  SUBCASE("disagreement equals twice KW variance on random inputs") {
    std::mt19937_64 rng(11);
    for (int c = 0; c < 50; ++c) {
      const int n = 2 + static_cast<int>(rng() % 6);
      const int K = 2 + static_cast<int>(rng() % 4);
      const auto g = make_corpus({random_heads(n, rng)});
      std::vector<CorpusFile> corpora;
      for (int k = 0; k < K; ++k) corpora.push_back(make_corpus({random_heads(n, rng)}));
      const auto v = votes_from(corpora, &g);
      CHECK(disagreement(v) == doctest::Approx(2.0 * kw_variance(v)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Fleiss' kappa, printed and classic forms") {
  // K=2, n=1, one correct one wrong, p_bar = 1/2
  const auto gold = make_corpus({{0}});
  const std::vector<CorpusFile> corpora{make_corpus({{0}}), make_corpus({{1}})};
  const auto v = votes_from(corpora, &gold);
  CHECK(fleiss_kappa(v, FleissForm::AsPrinted) == doctest::Approx(-2.0));
  CHECK(fleiss_kappa(v, FleissForm::Classic) == doctest::Approx(-1.0));

  const std::vector<CorpusFile> all_correct{make_corpus({{0}}), make_corpus({{0}})};
  CHECK_THROWS_AS(fleiss_kappa(votes_from(all_correct, &gold)), std::domain_error);
}

TEST_CASE("Kuncheva's diversity") {
  SUBCASE("unanimity per word is zero") {
    const auto gold = make_corpus({{2, 0}});
    // all right on word1, all wrong on word2
    const std::vector<CorpusFile> corpora{make_corpus({{2, 1}}), make_corpus({{2, 1}}),
                                          make_corpus({{2, 1}})};
    CHECK(kuncheva_diversity(votes_from(corpora, &gold)) == doctest::Approx(0.0));
  }
  SUBCASE("worked K=3 example") {
    const auto gold = make_corpus({{2, 0}});
    // word1: c=2 w=1; word2: c=0 w=3
    const std::vector<CorpusFile> corpora{make_corpus({{2, 1}}), make_corpus({{2, 1}}),
                                          make_corpus({{0, 1}})};
    CHECK(kuncheva_diversity(votes_from(corpora, &gold)) == doctest::Approx(0.5));
  }
  SUBCASE("K=2 split everywhere is maximal") {
    const auto gold = make_corpus({{2, 0}});
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0}}), make_corpus({{0, 1}})};
    CHECK(kuncheva_diversity(votes_from(corpora, &gold)) == doctest::Approx(1.0));
  }
  SUBCASE("single individual is rejected") {
    const auto gold = make_corpus({{2, 0}});
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0}})};
    CHECK_THROWS(kuncheva_diversity(votes_from(corpora, &gold)));
  }
}

TEST_CASE("PCDM") {
  const auto gold = make_corpus({{2, 0}});
  SUBCASE("all correct is zero") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0}}), make_corpus({{2, 0}})};
    CHECK(pcdm(votes_from(corpora, &gold)) == doctest::Approx(0.0));
  }
  SUBCASE("K=2 split everywhere is one") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0}}), make_corpus({{0, 1}})};
    CHECK(pcdm(votes_from(corpora, &gold)) == doctest::Approx(1.0));
  }
  SUBCASE("boundary proportion 0.1 counts as diverse") {
    std::vector<CorpusFile> corpora{make_corpus({{2, 0}})};
    for (int k = 0; k < 9; ++k) corpora.push_back(make_corpus({{0, 1}}));
    CHECK(pcdm(votes_from(corpora, &gold)) == doctest::Approx(1.0));
  }
}

TEST_CASE("metric invariances") {
  std::mt19937_64 rng(23);
  const int n = 6, K = 4;
  const auto g = make_corpus({random_heads(n, rng)});
  std::vector<CorpusFile> corpora;
  for (int k = 0; k < K; ++k) corpora.push_back(make_corpus({random_heads(n, rng)}));

  SUBCASE("permutation of individuals leaves every metric unchanged") {
    const auto v = votes_from(corpora, &g);
    std::vector<CorpusFile> shuffled{corpora[2], corpora[0], corpora[3], corpora[1]};
    const auto vs = votes_from(shuffled, &g);
    CHECK(society_entropy(v) == doctest::Approx(society_entropy(vs)));
    CHECK(disagreement(v) == doctest::Approx(disagreement(vs)));
    CHECK(kw_variance(v) == doctest::Approx(kw_variance(vs)));
    CHECK(kuncheva_diversity(v) == doctest::Approx(kuncheva_diversity(vs)));
    CHECK(pcdm(v) == doctest::Approx(pcdm(vs)));
  }
  SUBCASE("gold-based metrics see only the correct/incorrect partition") {
    // relabel every head value while preserving which ones match gold
    auto v = votes_from(corpora, &g);
    auto relabeled = v;
    for (std::size_t j = 0; j < v.heads.size(); ++j) {
      for (auto& a : relabeled.heads[j])
        if (a != v.gold[j]) a = (a + 1 == v.gold[j]) ? a + 2 : a + 1;
    }
    CHECK(disagreement(v) == doctest::Approx(disagreement(relabeled)));
    CHECK(kw_variance(v) == doctest::Approx(kw_variance(relabeled)));
    CHECK(kuncheva_diversity(v) == doctest::Approx(kuncheva_diversity(relabeled)));
    CHECK(pcdm(v) == doctest::Approx(pcdm(relabeled)));
  }
  SUBCASE("society entropy is bounded by log K") {
    const auto v = votes_from(corpora, nullptr);
    const double e = society_entropy(v);
    CHECK(e >= 0.0);
    CHECK(e <= std::log(static_cast<double>(K)) + 1e-12);
  }
}
