#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "depens/conllu.hpp"
#include "depens/diversity.hpp"
#include "depens/dpst.hpp"
#include "depens/mbr.hpp"
#include "depens/oracle.hpp"
#include "depens/selection.hpp"
#include "depens/uas.hpp"

namespace {

using namespace depens;

std::vector<CorpusFile> load_corpora(const std::vector<std::string>& paths, bool strict,
                                     bool verbose) {
  std::vector<CorpusFile> corpora;
  corpora.reserve(paths.size());
  for (const auto& p : paths) {
    corpora.push_back(read_corpus_file(p, strict));
    if (verbose)
      for (const auto& w : corpora.back().warnings)
        std::cerr << "warning: " << p << ": " << w << '\n';
  }
  return corpora;
}

std::vector<const CorpusFile*> pointers(const std::vector<CorpusFile>& corpora) {
  std::vector<const CorpusFile*> out;
  for (const auto& c : corpora) out.push_back(&c);
  return out;
}

void require_aligned(const std::vector<const CorpusFile*>& files) {
  const auto report = check_alignment(files);
  if (!report.ok) throw std::invalid_argument("misaligned inputs: " + report.message);
}

std::vector<Rational> parse_weight_list(const std::string& spec) {
  std::vector<Rational> weights;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) weights.push_back(parse_rational(item));
  return weights;
}

double parse_log_base(const std::string& s) {
  if (s == "e" || s.empty()) return 0.0;
  return std::stod(s);
}

int run_aggregate(const std::vector<std::string>& inputs, const std::string& objective,
                  const std::string& weights_spec, const std::string& weights_gold,
                  const std::string& output, int jobs, bool strict, bool verbose) {
  const auto corpora = load_corpora(inputs, strict, verbose);
  const auto files = pointers(corpora);
  require_aligned(files);

  std::vector<Rational> weights;
  if (!weights_spec.empty()) {
    weights = parse_weight_list(weights_spec);
    if (weights.size() != files.size())
      throw std::invalid_argument("expected " + std::to_string(files.size()) +
                                  " weights, got " + std::to_string(weights.size()));
  } else if (!weights_gold.empty()) {
    const CorpusFile gold = read_corpus_file(weights_gold, strict);
    weights = weights_from_validation(files, gold);
    for (std::size_t k = 0; k < weights.size(); ++k)
      std::cerr << "weight\t" << inputs[k] << '\t' << to_string(weights[k]) << '\n';
  }

  CorpusFile result;
  std::vector<std::string> warnings;
  if (objective == "uas") {
    result = aggregate_corpus(files, weights, jobs);
  } else if (objective == "f1") {
    result = aggregate_corpus_f1(files, weights, jobs, &warnings);
  } else {
    throw CLI::ValidationError("--objective must be uas or f1");
  }
  if (verbose)
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  write_corpus_file(result, output);
  return 0;
}

int run_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& metric, bool by_pos, bool strict, bool verbose) {
  const auto pred = read_corpus_file(pred_path, strict);
  const auto gold = read_corpus_file(gold_path, strict);
  if (verbose) {
    for (const auto& w : pred.warnings) std::cerr << "warning: " << pred_path << ": " << w << '\n';
    for (const auto& w : gold.warnings) std::cerr << "warning: " << gold_path << ": " << w << '\n';
  }
  if (metric == "uas") {
    std::printf("uas\t%.6f\n", corpus_uas(pred, gold));
  } else if (metric == "f1") {
    std::vector<std::string> warnings;
    const double f1 = corpus_f1(pred, gold, &warnings);
    if (verbose)
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    std::printf("f1\t%.6f\n", f1);
  } else {
    throw CLI::ValidationError("--metric must be uas or f1");
  }
  if (by_pos) {
    for (const auto& [pos, v] : uas_by_pos(pred, gold))
      std::printf("%s\t%.6f\t%zu\n", pos.c_str(), v.uas, v.support);
  }
  return 0;
}

int run_diversity(const std::vector<std::string>& inputs, const std::string& gold_path,
                  const std::string& metric_name_, const std::string& log_base,
                  const std::string& fleiss_form, bool strict, bool verbose) {
  DiversityConfig config;
  config.metric = parse_metric(metric_name_);
  config.log_base = parse_log_base(log_base);
  config.fleiss_form = fleiss_form == "classic" ? FleissForm::Classic : FleissForm::AsPrinted;

  if (metric_needs_gold(config.metric) && gold_path.empty())
    throw CLI::ValidationError("--gold is required for metric '" + metric_name_ + "'");

  const auto corpora = load_corpora(inputs, strict, verbose);
  const auto files = pointers(corpora);
  CorpusFile gold;
  const CorpusFile* gold_ptr = nullptr;
  if (!gold_path.empty()) {
    gold = read_corpus_file(gold_path, strict);
    gold_ptr = &gold;
  }
  const auto votes = pool_words(files, metric_needs_gold(config.metric) ? gold_ptr : nullptr);
  std::printf("%s\t%.6f\n", metric_name_.c_str(), compute_diversity(votes, config));
  return 0;
}

int run_select(const std::vector<std::string>& candidate_paths, const std::string& gold_path,
               const std::string& method_name, const std::string& metric_name_,
               double alpha, std::size_t size, const std::string& log_base,
               const std::string& output, bool strict, bool verbose) {
  const auto corpora = load_corpora(candidate_paths, strict, verbose);
  const CorpusFile gold = read_corpus_file(gold_path, strict);

  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < corpora.size(); ++k)
    candidates.push_back({candidate_paths[k], &corpora[k]});

  const SelectionMethod method = parse_selection_method(method_name);
  SelectionResult result;
  if (method == SelectionMethod::EnsembleValidation) {
    result = ensemble_validation_select(candidates, gold, size);
  } else {
    SelectionConfig config;
    config.alpha = alpha;
    config.size = size;
    config.method = method;
    config.metric.metric = parse_metric(metric_name_);
    config.metric.log_base = parse_log_base(log_base);
    result = forward_stepwise_select(candidates, gold, config);
  }

  std::ostringstream out;
  out << "step\tchosen\tobjective\n";
  for (std::size_t t = 0; t < result.steps.size(); ++t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", result.steps[t].objective);
    out << (t + 1) << '\t' << result.steps[t].name << '\t' << buf << '\n';
  }
  if (output.empty() || output == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(output);
    if (!f) throw std::runtime_error("cannot open " + output + " for writing");
    f << out.str();
  }
  return 0;
}

int run_curve(const std::vector<std::string>& inputs, const std::string& gold_path,
              bool strict, bool verbose) {
  const auto corpora = load_corpora(inputs, strict, verbose);
  const CorpusFile gold = read_corpus_file(gold_path, strict);
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < corpora.size(); ++k)
    candidates.push_back({inputs[k], &corpora[k]});
  for (const auto& point : incremental_curve(candidates, gold))
    std::printf("%zu\t%.6f\n", point.prefix, point.uas);
  return 0;
}

int run_selftest(int max_len, int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::printf("%s\t%s\n", ok ? "PASS" : "FAIL", name.c_str());
    all_ok = all_ok && ok;
  };
  std::printf("seed\t%llu\n", static_cast<unsigned long long>(seed));

  {
    const std::vector<std::size_t> expected{1, 2, 7};
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
      ok = ok && oracle::enumerate_projective_parses(n).size() == expected[n - 1];
    report("enumeration-counts-n1-3", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= std::min(max_len, 7); ++n)
      for (const auto& parse : oracle::enumerate_projective_parses(n))
        ok = ok && validate(parse, n).ok();
    report("enumerated-parses-valid", ok);
  }
  {
    bool ok = true;
    for (int c = 0; c < cases; ++c) {
      const int n = 1 + static_cast<int>(rng() % std::min(max_len, 7));
      const int K = 1 + static_cast<int>(rng() % 5);
      std::vector<HeadVector> parses;
      for (int k = 0; k < K; ++k) {
        HeadVector p(n);
        for (int j = 1; j <= n; ++j) {
          int a = static_cast<int>(rng() % (n + 1));
          if (a == j) a = 0;
          p[j - 1] = a;
        }
        parses.push_back(p);
      }
      const std::vector<Rational> w(K, Rational{1});
      const auto v = build_vote_matrix(parses, w);
      const auto decoded = eisner_decode(v);
      const auto [oracle_parse, oracle_score] = oracle::brute_force_uas_aggregate(parses, w);
      ok = ok && decode_score(v, decoded) == oracle_score && validate(decoded, n).ok();
    }
    report("eisner-matches-brute-force", ok);
  }
  {
    bool ok = true;
    for (int c = 0; c < cases; ++c) {
      const int n = 1 + static_cast<int>(rng() % std::min(max_len, 6));
      const int K = 2 + static_cast<int>(rng() % 3);
      const auto all = oracle::enumerate_projective_parses(n);
      std::vector<HeadVector> parses;
      for (int k = 0; k < K; ++k) parses.push_back(all[rng() % all.size()]);
      const std::vector<Rational> w(K, Rational{1});
      const auto h = build_hit_counts(parses, w);
      const auto tree = f1_aggregate(h);
      const auto [oracle_tree, oracle_score] = oracle::brute_force_f1_aggregate(h);
      ok = ok && f1_score_of(h, tree) == oracle_score;
    }
    report("f1-dp-matches-brute-force", ok);
  }
  {
    bool ok = true;
    for (int n = 1; n <= std::min(max_len, 7); ++n)
      for (const auto& parse : oracle::enumerate_projective_parses(n))
        ok = ok && dpst_to_heads(heads_to_dpst(parse)) == parse;
    report("dpst-round-trip", ok);
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dependency parse ensemble toolkit"};
  app.require_subcommand(1);

  bool strict = false;
  bool verbose = false;
  app.add_flag("--strict", strict, "reject unsupported CoNLL-U features");
  app.add_flag("-v,--verbose", verbose, "print warnings to stderr");

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "aggregate parses into an ensemble parse");
  std::vector<std::string> agg_inputs;
  std::string agg_objective = "uas", agg_weights, agg_weights_gold, agg_output;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  agg->add_option("--inputs", agg_inputs, "individuals' CoNLL-U files")->required()->expected(-1)->delimiter(',');
  agg->add_option("--objective", agg_objective, "uas or f1");
  agg->add_option("--weights", agg_weights, "comma-separated weights (decimal or p/q)");
  agg->add_option("--weights-from-gold", agg_weights_gold, "derive weights from validation UAS");
  agg->add_option("--output", agg_output, "output CoNLL-U path")->required();
  agg->add_option("--jobs", jobs, "worker threads");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "score predictions against gold");
  std::string eval_pred, eval_gold, eval_metric = "uas";
  bool by_pos = false;
  eval->add_option("--pred", eval_pred, "predicted CoNLL-U file")->required();
  eval->add_option("--gold", eval_gold, "gold CoNLL-U file")->required();
  eval->add_option("--metric", eval_metric, "uas or f1");
  eval->add_flag("--by-pos", by_pos, "per-POS UAS breakdown");

  // diversity
  auto* div = app.add_subcommand("diversity", "diversity of a set of individuals");
  std::vector<std::string> div_inputs;
  std::string div_gold, div_metric = "society-entropy", div_log_base = "e";
  std::string div_fleiss = "as-printed";
  div->add_option("--inputs", div_inputs, "individuals' CoNLL-U files")->required()->expected(-1)->delimiter(',');
  div->add_option("--gold", div_gold, "gold CoNLL-U file (required except for society-entropy)");
  div->add_option("--metric", div_metric,
                  "society-entropy, disagreement, kw-variance, fleiss-kappa, kuncheva, pcdm");
  div->add_option("--log-base", div_log_base, "entropy log base: e or a number > 1");
  div->add_option("--fleiss-form", div_fleiss, "as-printed or classic");

  // select
  auto* sel = app.add_subcommand("select", "forward-stepwise ensemble selection");
  std::vector<std::string> sel_candidates;
  std::string sel_gold, sel_method = "diversity-objective";
  std::string sel_metric = "society-entropy", sel_log_base = "e", sel_output;
  double alpha = 0.0;
  std::size_t size = 1;
  sel->add_option("--candidates", sel_candidates, "candidate CoNLL-U files")->required()->expected(-1)->delimiter(',');
  sel->add_option("--gold", sel_gold, "validation gold file")->required();
  sel->add_option("--method", sel_method,
                  "diversity-objective, quality-only, ensemble-validation");
  sel->add_option("--metric", sel_metric, "diversity metric");
  sel->add_option("--alpha", alpha, "diversity balancing coefficient");
  sel->add_option("--size", size, "number of individuals to select")->required();
  sel->add_option("--log-base", sel_log_base, "entropy log base");
  sel->add_option("--output", sel_output, "output TSV path (default stdout)");

  // curve
  auto* crv = app.add_subcommand("curve", "incremental-ensemble UAS curve");
  std::vector<std::string> crv_inputs;
  std::string crv_gold;
  crv->add_option("--inputs", crv_inputs, "ordered individuals' CoNLL-U files")->required()->expected(-1)->delimiter(',');
  crv->add_option("--gold", crv_gold, "reference CoNLL-U file")->required();

  // selftest
  auto* st = app.add_subcommand("selftest", "oracle-equivalence self checks");
  int max_len = 6, cases = 200;
  std::uint64_t seed = 1;
  st->add_option("--max-len", max_len, "max sentence length")->check(CLI::Range(1, 7));
  st->add_option("--cases", cases, "random cases per property");
  st->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*agg)
      return run_aggregate(agg_inputs, agg_objective, agg_weights, agg_weights_gold,
                           agg_output, jobs, strict, verbose);
    if (*eval) return run_evaluate(eval_pred, eval_gold, eval_metric, by_pos, strict, verbose);
    if (*div)
      return run_diversity(div_inputs, div_gold, div_metric, div_log_base, div_fleiss,
                           strict, verbose);
    if (*sel)
      return run_select(sel_candidates, sel_gold, sel_method, sel_metric, alpha, size,
                        sel_log_base, sel_output, strict, verbose);
    if (*crv) return run_curve(crv_inputs, crv_gold, strict, verbose);
    if (*st) return run_selftest(max_len, cases, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
