#ifndef DEPENS_TESTS_HELPERS_HPP
#define DEPENS_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "depens/conllu.hpp"
#include "depens/core.hpp"

namespace depens::testing {

// Corpus with synthetic tokens, one sentence per head vector.
inline CorpusFile make_corpus(const std::vector<HeadVector>& parses,
                              const std::vector<std::vector<std::string>>& pos = {},
                              const std::string& source = "<test>") {
  CorpusFile corpus;
  corpus.source = source;
  for (std::size_t s = 0; s < parses.size(); ++s) {
    CorpusSentence cs;
    cs.sentence.id = std::to_string(s + 1);
    cs.heads = parses[s];
    for (std::size_t j = 0; j < parses[s].size(); ++j) {
      Token tok;
      tok.index = static_cast<int>(j + 1);
      tok.form = "w" + std::to_string(j + 1);
      tok.pos = pos.empty() ? "X" : pos[s][j];
      cs.sentence.tokens.push_back(tok);
      ConlluColumns cols;
      cols.fill("_");
      cols[0] = std::to_string(j + 1);
      cols[1] = tok.form;
      cols[3] = tok.pos;
      cs.columns.push_back(cols);
    }
    corpus.sentences.push_back(std::move(cs));
  }
  return corpus;
}

// Arbitrary head assignment (not necessarily a tree), as weak parsers emit.
inline HeadVector random_heads(int n, std::mt19937_64& rng) {
  HeadVector p(n);
  for (int j = 1; j <= n; ++j) {
    int a = static_cast<int>(rng() % (n + 1));
    if (a == j) a = 0;
    p[j - 1] = a;
  }
  return p;
}

}  // namespace depens::testing

#endif
