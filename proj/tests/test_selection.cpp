#include <doctest.h>

#include <random>

#include "depens/mbr.hpp"
#include "depens/selection.hpp"
#include "depens/uas.hpp"
#include "helpers.hpp"

using namespace depens;
using depens::testing::make_corpus;
using depens::testing::random_heads;

namespace {

std::vector<Candidate> as_candidates(const std::vector<CorpusFile>& corpora) {
  std::vector<Candidate> out;
  for (std::size_t k = 0; k < corpora.size(); ++k)
    out.push_back({"c" + std::to_string(k), &corpora[k]});
  return out;
}

SelectionConfig entropy_config(double alpha, std::size_t size) {
  SelectionConfig config;
  config.alpha = alpha;
  config.size = size;
  config.metric.metric = DiversityMetric::SocietyEntropy;
  return config;
}

}  // namespace

TEST_CASE("selection objective") {
  const auto gold = make_corpus({{2, 0, 2, 2, 3}});
  const auto a = make_corpus({{2, 0, 2, 3, 0}});  // 3/5 correct
  CHECK(selection_objective({&a}, gold, 0.0, DiversityConfig{}) == doctest::Approx(0.6));

  // two identical individuals: zero entropy, objective is the UAS sum
  CHECK(selection_objective({&a, &a}, gold, 1.0, DiversityConfig{}) == doctest::Approx(1.2));
}

TEST_CASE("alpha zero reduces to UAS-descending truncation") {
  const auto gold = make_corpus({{2, 0, 2, 2}});
  const std::vector<CorpusFile> corpora{
      make_corpus({{0, 1, 2, 3}}),  // 0/4
      make_corpus({{2, 0, 2, 2}}),  // 4/4
      make_corpus({{2, 0, 2, 3}}),  // 3/4
      make_corpus({{2, 0, 1, 3}}),  // 2/4
  };
  const auto candidates = as_candidates(corpora);
  const auto result = forward_stepwise_select(candidates, gold, entropy_config(0.0, 3));
  CHECK(result.chosen_indices() == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("first pick ignores alpha and metric") {
  const auto gold = make_corpus({{2, 0, 2, 2}});
  const std::vector<CorpusFile> corpora{
      make_corpus({{2, 0, 2, 3}}),
      make_corpus({{2, 0, 2, 2}}),
      make_corpus({{0, 1, 2, 3}}),
  };
  const auto candidates = as_candidates(corpora);
  for (double alpha : {0.0, 0.5, 5.0}) {
    for (auto metric : {DiversityMetric::SocietyEntropy, DiversityMetric::KwVariance}) {
      SelectionConfig config = entropy_config(alpha, 2);
      config.metric.metric = metric;
      const auto result = forward_stepwise_select(candidates, gold, config);
      CHECK(result.chosen_indices()[0] == 1);
    }
  }
}

TEST_CASE("size one returns the best individual regardless of alpha") {
  const auto gold = make_corpus({{2, 0, 2}});
  const std::vector<CorpusFile> corpora{make_corpus({{0, 1, 2}}), make_corpus({{2, 0, 2}})};
  const auto candidates = as_candidates(corpora);
  const auto result = forward_stepwise_select(candidates, gold, entropy_config(10.0, 1));
  REQUIRE(result.steps.size() == 1);
  CHECK(result.steps[0].candidate_index == 1);
}

TEST_CASE("duplicates add no entropy, so a diverse weaker candidate wins") {
  const auto gold = make_corpus({{2, 0, 2, 2, 3, 5}});
  const auto strong = make_corpus({{2, 0, 2, 2, 3, 0}});   // 5/6
  const auto dup = strong;                                 // exact duplicate
  const auto weaker = make_corpus({{2, 0, 2, 3, 0, 5}});   // 4/6, different errors
  const std::vector<CorpusFile> corpora{strong, dup, weaker};
  const auto candidates = as_candidates(corpora);

  // with alpha large enough the entropy term dominates the UAS gap
  const auto diverse = forward_stepwise_select(candidates, gold, entropy_config(2.0, 2));
  CHECK(diverse.chosen_indices() == std::vector<std::size_t>{0, 2});

  // without diversity the duplicate is picked on UAS alone
  const auto plain = forward_stepwise_select(candidates, gold, entropy_config(0.0, 2));
  CHECK(plain.chosen_indices() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ensemble validation selection") {
  const auto gold = make_corpus({{2, 0, 2, 2}});
  SUBCASE("gold-identical candidate chosen at size 1") {
    const std::vector<CorpusFile> corpora{make_corpus({{0, 1, 2, 3}}),
                                          make_corpus({{2, 0, 2, 2}})};
    const auto result = ensemble_validation_select(as_candidates(corpora), gold, 1);
    CHECK(result.chosen_indices() == std::vector<std::size_t>{1});
  }
  SUBCASE("size equal to candidate count exhausts them") {
    const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2, 3}}),
                                          make_corpus({{2, 0, 2, 2}}),
                                          make_corpus({{0, 1, 2, 3}})};
    const auto result = ensemble_validation_select(as_candidates(corpora), gold, 3);
    CHECK(result.steps.size() == 3);
    auto chosen = result.chosen_indices();
    std::sort(chosen.begin(), chosen.end());
    CHECK(chosen == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("complementary weak candidate beats a duplicated strong one") {
    // strong is multi-root on sentence 2, so duplicating it cements the
    // error, while the weaker complementary individual tips the vote there
    const auto g = make_corpus({{0, 1}, {2, 0}});
    const auto strong = make_corpus({{0, 1}, {0, 0}});  // 3/4
    const auto comp = make_corpus({{2, 0}, {2, 0}});    // 2/4
    const std::vector<CorpusFile> corpora{strong, strong, comp};
    const auto result = ensemble_validation_select(as_candidates(corpora), g, 2);
    CHECK(result.chosen_indices() == std::vector<std::size_t>{0, 2});
  }
}

TEST_CASE("instrumentation: stepwise decodes nothing, validation decodes per candidate") {
  const auto gold = make_corpus({{2, 0, 2, 2}, {0, 1}});
  std::mt19937_64 rng(3);
  std::vector<CorpusFile> corpora;
  for (int k = 0; k < 4; ++k)
    corpora.push_back(make_corpus({random_heads(4, rng), random_heads(2, rng)}));
  const auto candidates = as_candidates(corpora);

  reset_decode_count();
  forward_stepwise_select(candidates, gold, entropy_config(1.0, 3));
  CHECK(decode_count() == 0);

  reset_decode_count();
  ensemble_validation_select(candidates, gold, 3);
  // steps evaluate 4, 3, 2 candidate ensembles over 2 sentences each
  CHECK(decode_count() == (4 + 3 + 2) * 2);
}

TEST_CASE("alpha sweep") {
  const auto gold = make_corpus({{2, 0, 2, 2}});
  const std::vector<CorpusFile> corpora{make_corpus({{2, 0, 2, 2}}),
                                        make_corpus({{2, 0, 2, 3}}),
                                        make_corpus({{0, 1, 2, 3}})};
  const auto candidates = as_candidates(corpora);
  DiversityConfig metric;

  SUBCASE("grid {0} equals quality-only selection") {
    const auto rows = alpha_sweep(candidates, gold, metric, 2, {0.0});
    REQUIRE(rows.size() == 1);
    const auto plain = forward_stepwise_select(candidates, gold, entropy_config(0.0, 2));
    CHECK(rows[0].selection.chosen_indices() == plain.chosen_indices());
  }
  SUBCASE("duplicate grid values are deduplicated") {
    const auto rows = alpha_sweep(candidates, gold, metric, 2, {0.5, 0.0, 0.5});
    CHECK(rows.size() == 2);
    CHECK(rows[0].alpha == 0.0);
    CHECK(rows[1].alpha == 0.5);
  }
  SUBCASE("identical selections report identical ensemble UAS") {
    const auto rows = alpha_sweep(candidates, gold, metric, 2, {0.0, 0.1});
    REQUIRE(rows.size() == 2);
    if (rows[0].selection.chosen_indices() == rows[1].selection.chosen_indices())
      CHECK(rows[0].ensemble_uas == doctest::Approx(rows[1].ensemble_uas));
  }
}

TEST_CASE("incremental curve") {
  SUBCASE("single candidate gives its own UAS") {
    const auto gold = make_corpus({{2, 0, 2}});
    const std::vector<CorpusFile> corpora{make_corpus({{0, 1, 2}})};
    const auto curve = incremental_curve(as_candidates(corpora), gold);
    REQUIRE(curve.size() == 1);
    CHECK(curve[0].uas == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("duplicated candidate yields a flat curve") {
    const auto gold = make_corpus({{2, 0, 2}});
    const auto x = make_corpus({{2, 0, 1}});
    const std::vector<CorpusFile> corpora{x, x};
    const auto curve = incremental_curve(as_candidates(corpora), gold);
    REQUIRE(curve.size() == 2);
    CHECK(curve[0].uas == doctest::Approx(curve[1].uas));
  }
  SUBCASE("correlated weak individuals drag the curve down") {
    const auto gold = make_corpus({{2, 0, 2, 2, 3}});
    const auto strong1 = make_corpus({{2, 0, 2, 2, 0}});  // 4/5
    const auto strong2 = make_corpus({{2, 0, 2, 3, 3}});  // 4/5
    const auto weak = make_corpus({{0, 3, 4, 0, 1}});     // 0/5, shared by three
    const std::vector<CorpusFile> corpora{strong1, strong2, weak, weak, weak};
    const auto curve = incremental_curve(as_candidates(corpora), gold);
    REQUIRE(curve.size() == 5);
    CHECK(curve[4].uas < curve[1].uas);
  }
}
