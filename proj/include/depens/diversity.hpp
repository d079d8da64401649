#ifndef DEPENS_DIVERSITY_HPP
#define DEPENS_DIVERSITY_HPP

#include <string>
#include <vector>

#include "depens/conllu.hpp"
#include "depens/core.hpp"

namespace depens {

enum class DiversityMetric {
  SocietyEntropy,
  Disagreement,
  KwVariance,
  FleissKappa,
  Kuncheva,
  Pcdm,
};

enum class FleissForm { AsPrinted, Classic };

struct DiversityConfig {
  DiversityMetric metric = DiversityMetric::SocietyEntropy;
  double log_base = 0.0;  // 0 = natural log
  FleissForm fleiss_form = FleissForm::AsPrinted;
};

DiversityMetric parse_metric(const std::string& name);
std::string metric_name(DiversityMetric m);
bool metric_needs_gold(DiversityMetric m);

// Per-word head votes pooled over the scoped corpus; the unit on which all
// metrics operate.
struct WordVotes {
  std::vector<std::vector<int>> heads;  // heads[j][k] = individual k's head for word j
  std::vector<int> gold;                // empty when no gold given
};

WordVotes pool_words(const std::vector<const CorpusFile*>& selected,
                     const CorpusFile* gold);

std::vector<double> society_distribution(const std::vector<int>& heads_at_j, int n);

// Mean per-word Shannon entropy of the society distribution; gold-free.
double society_entropy(const WordVotes& votes, double log_base = 0.0);

double disagreement(const WordVotes& votes);
double kw_variance(const WordVotes& votes);
double fleiss_kappa(const WordVotes& votes, FleissForm form = FleissForm::AsPrinted);
double kuncheva_diversity(const WordVotes& votes);
double pcdm(const WordVotes& votes);

double compute_diversity(const WordVotes& votes, const DiversityConfig& config);

}  // namespace depens

#endif
