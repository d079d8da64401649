#ifndef DEPENS_DPST_HPP
#define DEPENS_DPST_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "depens/conllu.hpp"
#include "depens/core.hpp"
#include "depens/rational.hpp"

namespace depens {

// Half-open interval of word positions, 1-based.
struct Span {
  int begin = 0;
  int end = 0;

  auto operator<=>(const Span&) const = default;
};

// Dependency-based phrase-structure tree: every node covers the contiguous
// yield of its head word; children partition the span minus the head
// position (each node owns exactly one word).
struct DpstNode {
  Span span;
  int head = 0;  // word position, begin <= head < end
  std::vector<DpstNode> children;
};

struct Dpst {
  int n = 0;
  DpstNode root;
};

// Weighted phrase occurrence counts, integer-scaled like VoteMatrix.
struct HitCountTable {
  int n = 0;
  std::int64_t scale = 1;
  std::map<Span, std::int64_t> counts;

  std::int64_t at(Span c) const {
    const auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
  }
};

// Conversion between head vectors and DPSTs (mutually inverse on projective
// single-root parses). heads_to_dpst throws on non-projective or multi-root
// input.
Dpst heads_to_dpst(const HeadVector& parse);
HeadVector dpst_to_heads(const Dpst& tree);

std::set<Span> extract_phrases(const Dpst& tree);

double sentence_f1(const Dpst& a, const Dpst& b);

// Micro phrasal F1 over all sentences; non-projective or multi-root parses
// on either side skip the sentence with a warning appended to `warnings`.
double corpus_f1(const CorpusFile& pred, const CorpusFile& gold,
                 std::vector<std::string>* warnings = nullptr);

// Weighted phrase tallies over the convertible parses; indices of skipped
// (non-projective or multi-root) parses are appended to `skipped`.
HitCountTable build_hit_counts(const std::vector<HeadVector>& parses,
                               const std::vector<Rational>& weights,
                               std::vector<std::size_t>* skipped = nullptr);

// DPST maximizing the total hit count of its phrases, by the one-leaf
// constrained span dynamic program; the full span is forced to be a node so
// the result is single-root. Ties prefer the smaller head/split index and
// a node over a placeholder.
Dpst f1_aggregate(const HitCountTable& h);

std::int64_t f1_score_of(const HitCountTable& h, const Dpst& tree);

// Per-sentence hit counts + DP over aligned corpora.
CorpusFile aggregate_corpus_f1(const std::vector<const CorpusFile*>& outputs,
                               const std::vector<Rational>& weights = {}, int jobs = 1,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace depens

#endif
