#include "depens/uas.hpp"

#include <stdexcept>

namespace depens {

namespace {

void require_aligned(const CorpusFile& pred, const CorpusFile& gold) {
  const auto report = check_alignment({&pred, &gold});
  if (!report.ok) throw std::invalid_argument("misaligned corpora: " + report.message);
}

}  // namespace

double sentence_uas(const HeadVector& pred, const HeadVector& gold) {
  if (pred.size() != gold.size())
    throw std::invalid_argument("sentence_uas: length mismatch");
  if (pred.empty()) throw std::invalid_argument("sentence_uas: empty sentence");
  std::size_t hits = 0;
  for (std::size_t j = 0; j < pred.size(); ++j)
    if (pred[j] == gold[j]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double corpus_uas(const CorpusFile& pred, const CorpusFile& gold) {
  require_aligned(pred, gold);
  std::size_t hits = 0, words = 0;
  for (std::size_t s = 0; s < pred.size(); ++s) {
    const auto& p = pred.sentences[s].heads;
    const auto& g = gold.sentences[s].heads;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p[j] == g[j]) ++hits;
    words += p.size();
  }
  if (words == 0) throw std::invalid_argument("corpus_uas: empty corpus");
  return static_cast<double>(hits) / static_cast<double>(words);
}

std::map<std::string, PosUas> uas_by_pos(const CorpusFile& pred, const CorpusFile& gold) {
  require_aligned(pred, gold);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // pos -> (hits, words)
  for (std::size_t s = 0; s < pred.size(); ++s) {
    const auto& p = pred.sentences[s].heads;
    const auto& g = gold.sentences[s].heads;
    const auto& toks = gold.sentences[s].sentence.tokens;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const std::string tag = toks[j].pos.empty() ? "_" : toks[j].pos;
      auto& t = tally[tag];
      if (p[j] == g[j]) ++t.first;
      ++t.second;
    }
  }
  std::map<std::string, PosUas> out;
  for (const auto& [tag, t] : tally)
    out[tag] = PosUas{static_cast<double>(t.first) / static_cast<double>(t.second),
                      t.second};
  return out;
}

}  // namespace depens
