#ifndef DEPENS_MBR_HPP
#define DEPENS_MBR_HPP

#include <cstdint>
#include <vector>

#include "depens/conllu.hpp"
#include "depens/core.hpp"
#include "depens/rational.hpp"

namespace depens {

// Weighted head-vote tallies for one sentence. Rational weights are brought
// to a common denominator `scale`, so votes are exact integers: votes[a][j]
// is scale times the total weight of individuals assigning head a (0 = ROOT)
// to word j (1-based).
struct VoteMatrix {
  int n = 0;
  std::int64_t scale = 1;
  std::vector<std::vector<std::int64_t>> votes;  // (n+1) x (n+1), column 0 unused

  std::int64_t at(int head, int word) const { return votes[head][word]; }
};

VoteMatrix build_vote_matrix(const std::vector<HeadVector>& parses,
                             const std::vector<Rational>& weights);

// Projective single-root parse maximizing the summed votes of its
// attachments, by the first-order complete/incomplete span dynamic program.
// Ties prefer the smaller split point and the smaller head index.
HeadVector eisner_decode(const VoteMatrix& v);

std::int64_t decode_score(const VoteMatrix& v, const HeadVector& parse);

// Per-sentence vote tally + decode over aligned corpora. Empty weights means
// unit weights.
CorpusFile aggregate_corpus(const std::vector<const CorpusFile*>& outputs,
                            const std::vector<Rational>& weights = {}, int jobs = 1);

// Validation-UAS weights, rounded to `digits` decimal places as exact
// rationals.
std::vector<Rational> weights_from_validation(
    const std::vector<const CorpusFile*>& outputs, const CorpusFile& gold,
    int digits = 3);

// Instrumentation: number of eisner_decode calls since the last reset.
std::int64_t decode_count();
void reset_decode_count();

}  // namespace depens

#endif
