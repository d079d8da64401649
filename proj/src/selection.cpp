#include "depens/selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "depens/mbr.hpp"
#include "depens/uas.hpp"

namespace depens {

SelectionMethod parse_selection_method(const std::string& name) {
  if (name == "diversity-objective") return SelectionMethod::DiversityObjective;
  if (name == "quality-only") return SelectionMethod::QualityOnly;
  if (name == "ensemble-validation") return SelectionMethod::EnsembleValidation;
  throw std::invalid_argument("unknown selection method '" + name + "'");
}

std::string selection_method_name(SelectionMethod m) {
  switch (m) {
    case SelectionMethod::DiversityObjective: return "diversity-objective";
    case SelectionMethod::QualityOnly: return "quality-only";
    case SelectionMethod::EnsembleValidation: return "ensemble-validation";
  }
  return "unknown";
}

std::vector<std::size_t> SelectionResult::chosen_indices() const {
  std::vector<std::size_t> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.candidate_index);
  return out;
}

double selection_objective(const std::vector<const CorpusFile*>& selected,
                           const CorpusFile& gold, double alpha,
                           const DiversityConfig& metric) {
  if (selected.empty()) throw std::invalid_argument("selection_objective: empty selection");
  double quality = 0.0;
  for (const CorpusFile* f : selected) quality += corpus_uas(*f, gold);
  // a singleton has no diversity under any metric
  if (alpha == 0.0 || selected.size() == 1) return quality;
  const auto votes = pool_words(selected, metric_needs_gold(metric.metric) ? &gold : nullptr);
  return quality + alpha * compute_diversity(votes, metric);
}

SelectionResult forward_stepwise_select(const std::vector<Candidate>& candidates,
                                        const CorpusFile& gold,
                                        const SelectionConfig& config) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  if (config.size < 1 || config.size > candidates.size())
    throw std::invalid_argument("selection size out of range");

  const double alpha =
      config.method == SelectionMethod::QualityOnly ? 0.0 : config.alpha;

  std::vector<double> uas(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k)
    uas[k] = corpus_uas(*candidates[k].corpus, gold);

  SelectionResult result;
  result.config = config;

  // first pick is the best individual, independent of alpha and metric
  std::size_t first = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k)
    if (uas[k] > uas[first]) first = k;

  std::vector<std::size_t> chosen{first};
  std::vector<const CorpusFile*> selected{candidates[first].corpus};
  result.steps.push_back({candidates[first].name, first,
                          selection_objective(selected, gold, alpha, config.metric)});

  while (chosen.size() < config.size) {
    std::size_t best_k = candidates.size();
    double best_obj = 0.0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      selected.push_back(candidates[k].corpus);
      const double obj = selection_objective(selected, gold, alpha, config.metric);
      selected.pop_back();
      if (best_k == candidates.size() || obj > best_obj) {
        best_k = k;
        best_obj = obj;
      }
    }
    chosen.push_back(best_k);
    selected.push_back(candidates[best_k].corpus);
    result.steps.push_back({candidates[best_k].name, best_k, best_obj});
  }
  return result;
}

SelectionResult ensemble_validation_select(const std::vector<Candidate>& candidates,
                                           const CorpusFile& gold, std::size_t size) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  if (size < 1 || size > candidates.size())
    throw std::invalid_argument("selection size out of range");

  SelectionResult result;
  result.config.size = size;
  result.config.method = SelectionMethod::EnsembleValidation;

  std::vector<std::size_t> chosen;
  std::vector<const CorpusFile*> selected;
  while (chosen.size() < size) {
    std::size_t best_k = candidates.size();
    double best_uas = 0.0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (std::find(chosen.begin(), chosen.end(), k) != chosen.end()) continue;
      selected.push_back(candidates[k].corpus);
      const CorpusFile ensemble = aggregate_corpus(selected);
      selected.pop_back();
      const double u = corpus_uas(ensemble, gold);
      if (best_k == candidates.size() || u > best_uas) {
        best_k = k;
        best_uas = u;
      }
    }
    chosen.push_back(best_k);
    selected.push_back(candidates[best_k].corpus);
    result.steps.push_back({candidates[best_k].name, best_k, best_uas});
  }
  return result;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(i / 10.0);
  return grid;
}

std::vector<AlphaSweepRow> alpha_sweep(const std::vector<Candidate>& candidates,
                                       const CorpusFile& gold,
                                       const DiversityConfig& metric, std::size_t size,
                                       std::vector<double> alpha_grid) {
  if (alpha_grid.empty()) alpha_grid = default_alpha_grid();
  std::sort(alpha_grid.begin(), alpha_grid.end());
  alpha_grid.erase(std::unique(alpha_grid.begin(), alpha_grid.end()), alpha_grid.end());

  std::vector<AlphaSweepRow> rows;
  for (double alpha : alpha_grid) {
    SelectionConfig config;
    config.alpha = alpha;
    config.size = size;
    config.metric = metric;
    config.method = SelectionMethod::DiversityObjective;
    AlphaSweepRow row;
    row.alpha = alpha;
    row.selection = forward_stepwise_select(candidates, gold, config);
    std::vector<const CorpusFile*> selected;
    for (std::size_t k : row.selection.chosen_indices())
      selected.push_back(candidates[k].corpus);
    row.ensemble_uas = corpus_uas(aggregate_corpus(selected), gold);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CurvePoint> incremental_curve(const std::vector<Candidate>& candidates,
                                          const CorpusFile& reference) {
  if (candidates.empty()) throw std::invalid_argument("no candidates");
  std::vector<CurvePoint> curve;
  std::vector<const CorpusFile*> prefix;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    prefix.push_back(candidates[t].corpus);
    const CorpusFile ensemble = aggregate_corpus(prefix);
    curve.push_back({t + 1, corpus_uas(ensemble, reference)});
  }
  return curve;
}

}  // namespace depens
