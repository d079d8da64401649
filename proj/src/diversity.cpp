#include "depens/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace depens {

DiversityMetric parse_metric(const std::string& name) {
  if (name == "society-entropy") return DiversityMetric::SocietyEntropy;
  if (name == "disagreement") return DiversityMetric::Disagreement;
  if (name == "kw-variance") return DiversityMetric::KwVariance;
  if (name == "fleiss-kappa") return DiversityMetric::FleissKappa;
  if (name == "kuncheva") return DiversityMetric::Kuncheva;
  if (name == "pcdm") return DiversityMetric::Pcdm;
  throw std::invalid_argument("unknown diversity metric '" + name + "'");
}

std::string metric_name(DiversityMetric m) {
  switch (m) {
    case DiversityMetric::SocietyEntropy: return "society-entropy";
    case DiversityMetric::Disagreement: return "disagreement";
    case DiversityMetric::KwVariance: return "kw-variance";
    case DiversityMetric::FleissKappa: return "fleiss-kappa";
    case DiversityMetric::Kuncheva: return "kuncheva";
    case DiversityMetric::Pcdm: return "pcdm";
  }
  return "unknown";
}

bool metric_needs_gold(DiversityMetric m) {
  return m != DiversityMetric::SocietyEntropy;
}

WordVotes pool_words(const std::vector<const CorpusFile*>& selected,
                     const CorpusFile* gold) {
  if (selected.empty()) throw std::invalid_argument("pool_words: empty selection");
  std::vector<const CorpusFile*> all = selected;
  if (gold) all.push_back(gold);
  const auto report = check_alignment(all);
  if (!report.ok) throw std::invalid_argument("misaligned corpora: " + report.message);

  WordVotes votes;
  const std::size_t K = selected.size();
  for (std::size_t s = 0; s < selected[0]->size(); ++s) {
    const std::size_t len = selected[0]->sentences[s].sentence.size();
    for (std::size_t j = 0; j < len; ++j) {
      std::vector<int> heads(K);
      for (std::size_t k = 0; k < K; ++k) heads[k] = selected[k]->sentences[s].heads[j];
      votes.heads.push_back(std::move(heads));
      if (gold) votes.gold.push_back(gold->sentences[s].heads[j]);
    }
  }
  if (votes.heads.empty()) throw std::invalid_argument("pool_words: empty corpus");
  return votes;
}

std::vector<double> society_distribution(const std::vector<int>& heads_at_j, int n) {
  if (heads_at_j.empty())
    throw std::invalid_argument("society_distribution: empty selection");
  std::vector<double> sd(n + 1, 0.0);
  for (int a : heads_at_j) {
    if (a < 0 || a > n) throw std::invalid_argument("society_distribution: head out of range");
    sd[a] += 1.0;
  }
  for (double& p : sd) p /= static_cast<double>(heads_at_j.size());
  return sd;
}

double society_entropy(const WordVotes& votes, double log_base) {
  if (log_base != 0.0 && log_base <= 1.0)
    throw std::invalid_argument("society_entropy: log base must exceed 1");
  double total = 0.0;
  for (const auto& heads : votes.heads) {
    std::map<int, int> counts;
    for (int a : heads) ++counts[a];
    const double K = static_cast<double>(heads.size());
    double e = 0.0;
    for (const auto& [a, c] : counts) {
      const double p = c / K;
      e -= p * std::log(p);
    }
    total += e;
  }
  if (log_base != 0.0) total /= std::log(log_base);
  return total / static_cast<double>(votes.heads.size());
}

namespace {

struct CorrectWrong {
  std::size_t n = 0;
  std::size_t K = 0;
  std::vector<std::size_t> correct;  // per word: individuals matching gold
};

CorrectWrong tally(const WordVotes& votes) {
  if (votes.gold.size() != votes.heads.size())
    throw std::invalid_argument("diversity: gold required for this metric");
  CorrectWrong t;
  t.n = votes.heads.size();
  t.K = votes.heads[0].size();
  t.correct.reserve(t.n);
  for (std::size_t j = 0; j < t.n; ++j) {
    std::size_t c = 0;
    for (int a : votes.heads[j])
      if (a == votes.gold[j]) ++c;
    t.correct.push_back(c);
  }
  return t;
}

}  // namespace

double disagreement(const WordVotes& votes) {
  const auto t = tally(votes);
  // ordered pairs (including self-pairs, which contribute 0): 2*c*w per word
  double sum = 0.0;
  for (std::size_t c : t.correct) sum += 2.0 * c * (t.K - c);
  return sum / (static_cast<double>(t.n) * t.K * t.K);
}

double kw_variance(const WordVotes& votes) {
  const auto t = tally(votes);
  double sum = 0.0;
  for (std::size_t c : t.correct) sum += static_cast<double>(c) * (t.K - c);
  return sum / (static_cast<double>(t.n) * t.K * t.K);
}

double fleiss_kappa(const WordVotes& votes, FleissForm form) {
  const auto t = tally(votes);
  std::size_t hits = 0;
  double cw_sum = 0.0;
  for (std::size_t c : t.correct) {
    hits += c;
    cw_sum += static_cast<double>(c) * (t.K - c);
  }
  const double p_bar = static_cast<double>(hits) / (static_cast<double>(t.n) * t.K);
  if (p_bar == 0.0 || p_bar == 1.0)
    throw std::domain_error("fleiss_kappa: undefined for degenerate hit fraction");
  const double nk = static_cast<double>(t.n) * t.K;
  if (form == FleissForm::AsPrinted)
    return cw_sum / (nk * (1.0 - static_cast<double>(t.K)) * p_bar * (1.0 - p_bar));
  return 1.0 - cw_sum / (nk * (static_cast<double>(t.K) - 1.0) * p_bar * (1.0 - p_bar));
}

double kuncheva_diversity(const WordVotes& votes) {
  const auto t = tally(votes);
  if (t.K < 2) throw std::invalid_argument("kuncheva_diversity: needs at least 2 individuals");
  const std::size_t half_up = (t.K + 1) / 2;  // ceil(K/2)
  double sum = 0.0;
  for (std::size_t c : t.correct) sum += static_cast<double>(std::min(c, t.K - c));
  return sum / (static_cast<double>(t.n) * (t.K - half_up));
}

double pcdm(const WordVotes& votes) {
  const auto t = tally(votes);
  std::size_t diverse = 0;
  for (std::size_t c : t.correct) {
    // 0.1 <= c/K <= 0.9, boundaries inclusive, checked in integers
    if (10 * c >= t.K && 10 * c <= 9 * t.K) ++diverse;
  }
  return static_cast<double>(diverse) / static_cast<double>(t.n);
}

double compute_diversity(const WordVotes& votes, const DiversityConfig& config) {
  switch (config.metric) {
    case DiversityMetric::SocietyEntropy: return society_entropy(votes, config.log_base);
    case DiversityMetric::Disagreement: return disagreement(votes);
    case DiversityMetric::KwVariance: return kw_variance(votes);
    case DiversityMetric::FleissKappa: return fleiss_kappa(votes, config.fleiss_form);
    case DiversityMetric::Kuncheva: return kuncheva_diversity(votes);
    case DiversityMetric::Pcdm: return pcdm(votes);
  }
  throw std::logic_error("compute_diversity: unhandled metric");
}

}  // namespace depens
