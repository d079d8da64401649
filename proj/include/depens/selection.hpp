#ifndef DEPENS_SELECTION_HPP
#define DEPENS_SELECTION_HPP

#include <string>
#include <vector>

#include "depens/conllu.hpp"
#include "depens/diversity.hpp"

namespace depens {

enum class SelectionMethod { DiversityObjective, QualityOnly, EnsembleValidation };

SelectionMethod parse_selection_method(const std::string& name);
std::string selection_method_name(SelectionMethod m);

struct SelectionConfig {
  double alpha = 0.0;
  std::size_t size = 1;
  DiversityConfig metric;
  SelectionMethod method = SelectionMethod::DiversityObjective;
};

struct SelectionStep {
  std::string name;
  std::size_t candidate_index;
  double objective;  // objective value after this addition
};

struct SelectionResult {
  std::vector<SelectionStep> steps;
  SelectionConfig config;

  std::vector<std::size_t> chosen_indices() const;
};

struct Candidate {
  std::string name;
  const CorpusFile* corpus;
};

// Sum of individual validation UAS plus alpha times the configured
// diversity over the pooled validation words.
double selection_objective(const std::vector<const CorpusFile*>& selected,
                           const CorpusFile& gold, double alpha,
                           const DiversityConfig& metric);

// Greedy: best individual UAS first, then argmax of the objective over the
// remaining candidates. Ties broken by candidate input order. Never decodes
// an ensemble.
SelectionResult forward_stepwise_select(const std::vector<Candidate>& candidates,
                                        const CorpusFile& gold,
                                        const SelectionConfig& config);

// Caruana-style baseline: at each step add the candidate whose aggregated
// ensemble (unit weights) maximizes validation UAS; objective values are the
// ensemble UAS after each step.
SelectionResult ensemble_validation_select(const std::vector<Candidate>& candidates,
                                           const CorpusFile& gold, std::size_t size);

struct AlphaSweepRow {
  double alpha;
  SelectionResult selection;
  double ensemble_uas;
};

std::vector<AlphaSweepRow> alpha_sweep(const std::vector<Candidate>& candidates,
                                       const CorpusFile& gold,
                                       const DiversityConfig& metric, std::size_t size,
                                       std::vector<double> alpha_grid = {});

struct CurvePoint {
  std::size_t prefix;
  double uas;
};

// Ensemble UAS of the first t candidates, unit weights, for t = 1..K.
std::vector<CurvePoint> incremental_curve(const std::vector<Candidate>& candidates,
                                          const CorpusFile& reference);

std::vector<double> default_alpha_grid();

}  // namespace depens

#endif
