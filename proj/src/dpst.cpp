#include "depens/dpst.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace depens {

namespace {

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

DpstNode build_node(int w, const std::vector<int>& lo, const std::vector<int>& hi,
                    const std::vector<std::vector<int>>& deps) {
  DpstNode node;
  node.span = Span{lo[w], hi[w] + 1};
  node.head = w;
  for (int d : deps[w]) node.children.push_back(build_node(d, lo, hi, deps));
  return node;
}

void count_nodes(const DpstNode& node, int& count) {
  ++count;
  for (const auto& c : node.children) count_nodes(c, count);
}

void check_node(const DpstNode& node, int n) {
  if (node.span.begin < 1 || node.span.end > n + 1 || node.span.begin >= node.span.end)
    throw std::invalid_argument("dpst: bad span");
  if (node.head < node.span.begin || node.head >= node.span.end)
    throw std::invalid_argument("dpst: head outside span");
  // children partition the span minus the head position
  int cursor = node.span.begin;
  for (const auto& c : node.children) {
    if (cursor == node.head) ++cursor;
    if (c.span.begin != cursor)
      throw std::invalid_argument("dpst: children do not partition span");
    cursor = c.span.end;
    check_node(c, n);
  }
  if (cursor == node.head) ++cursor;
  if (cursor != node.span.end)
    throw std::invalid_argument("dpst: children do not partition span");
}

void collect_heads(const DpstNode& node, int parent_head, HeadVector& heads) {
  heads[node.head - 1] = parent_head;
  for (const auto& c : node.children) collect_heads(c, node.head, heads);
}

void collect_spans(const DpstNode& node, std::set<Span>& spans) {
  spans.insert(node.span);
  for (const auto& c : node.children) collect_spans(c, spans);
}

}  // namespace

Dpst heads_to_dpst(const HeadVector& parse) {
  const int n = static_cast<int>(parse.size());
  if (n == 0) throw std::invalid_argument("heads_to_dpst: empty parse");
  if (!is_single_root(parse) || !is_projective(n, parse))
    throw std::invalid_argument("heads_to_dpst: parse must be projective and single-root");

  std::vector<int> lo(n + 1), hi(n + 1);
  std::vector<std::vector<int>> deps(n + 1);
  for (int j = 1; j <= n; ++j) lo[j] = hi[j] = j;
  int root = 0;
  for (int j = 1; j <= n; ++j) {
    const int h = parse[j - 1];
    if (h == 0) {
      root = j;
      continue;
    }
    deps[h].push_back(j);
    int cur = h;
    while (cur != 0) {
      lo[cur] = std::min(lo[cur], j);
      hi[cur] = std::max(hi[cur], j);
      cur = parse[cur - 1];
    }
  }
  Dpst tree;
  tree.n = n;
  tree.root = build_node(root, lo, hi, deps);
  return tree;
}

HeadVector dpst_to_heads(const Dpst& tree) {
  if (tree.n < 1) throw std::invalid_argument("dpst_to_heads: empty tree");
  if (tree.root.span.begin != 1 || tree.root.span.end != tree.n + 1)
    throw std::invalid_argument("dpst_to_heads: root does not cover the sentence");
  check_node(tree.root, tree.n);
  int nodes = 0;
  count_nodes(tree.root, nodes);
  if (nodes != tree.n) throw std::invalid_argument("dpst_to_heads: node count != n");
  HeadVector heads(tree.n, -1);
  collect_heads(tree.root, 0, heads);
  return heads;
}

std::set<Span> extract_phrases(const Dpst& tree) {
  std::set<Span> spans;
  collect_spans(tree.root, spans);
  return spans;
}

double sentence_f1(const Dpst& a, const Dpst& b) {
  if (a.n != b.n) throw std::invalid_argument("sentence_f1: length mismatch");
  const auto ca = extract_phrases(a);
  const auto cb = extract_phrases(b);
  std::size_t overlap = 0;
  for (const Span& s : ca)
    if (cb.count(s)) ++overlap;
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(ca.size() + cb.size());
}

double corpus_f1(const CorpusFile& pred, const CorpusFile& gold,
                 std::vector<std::string>* warnings) {
  const auto report = check_alignment({&pred, &gold});
  if (!report.ok) throw std::invalid_argument("misaligned corpora: " + report.message);
  std::size_t overlap = 0, denom = 0;
  for (std::size_t s = 0; s < pred.size(); ++s) {
    Dpst tp, tg;
    try {
      tp = heads_to_dpst(pred.sentences[s].heads);
      tg = heads_to_dpst(gold.sentences[s].heads);
    } catch (const std::invalid_argument&) {
      if (warnings)
        warnings->push_back("sentence " + pred.sentences[s].sentence.id +
                            ": skipped (not projective single-root)");
      continue;
    }
    const auto cp = extract_phrases(tp);
    const auto cg = extract_phrases(tg);
    for (const Span& sp : cp)
      if (cg.count(sp)) ++overlap;
    denom += cp.size() + cg.size();
  }
  if (denom == 0) throw std::invalid_argument("corpus_f1: no comparable sentences");
  return 2.0 * static_cast<double>(overlap) / static_cast<double>(denom);
}

HitCountTable build_hit_counts(const std::vector<HeadVector>& parses,
                               const std::vector<Rational>& weights,
                               std::vector<std::size_t>* skipped) {
  if (parses.empty()) throw std::invalid_argument("build_hit_counts: no parses");
  if (parses.size() != weights.size())
    throw std::invalid_argument("build_hit_counts: weights/parses size mismatch");
  HitCountTable table;
  table.n = static_cast<int>(parses[0].size());
  for (const auto& w : weights) table.scale = std::lcm(table.scale, w.den);
  bool any = false;
  for (std::size_t k = 0; k < parses.size(); ++k) {
    const std::int64_t w = weights[k].num * (table.scale / weights[k].den);
    Dpst tree;
    try {
      tree = heads_to_dpst(parses[k]);
    } catch (const std::invalid_argument&) {
      if (skipped) skipped->push_back(k);
      continue;
    }
    if (w == 0) continue;
    any = true;
    for (const Span& c : extract_phrases(tree)) table.counts[c] += w;
  }
  if (!any) throw std::invalid_argument("build_hit_counts: every individual was skipped");
  return table;
}

namespace {

struct F1Chart {
  int n;
  std::vector<std::int64_t> total, incl, excl;
  std::vector<int> incl_j, excl_j;
  std::vector<char> use_incl;

  explicit F1Chart(int n_)
      : n(n_),
        total((n + 2) * (n + 2), 0),
        incl((n + 2) * (n + 2), kNegInf),
        excl((n + 2) * (n + 2), kNegInf),
        incl_j((n + 2) * (n + 2), -1),
        excl_j((n + 2) * (n + 2), -1),
        use_incl((n + 2) * (n + 2), 1) {}
  int idx(int b, int e) const { return b * (n + 2) + e; }
};

std::vector<DpstNode> backtrack(const F1Chart& c, const HitCountTable& h, int b, int e,
                                bool force_incl) {
  if (b == e) return {};
  const int i = c.idx(b, e);
  if (force_incl || c.use_incl[i]) {
    const int j = c.incl_j[i];
    DpstNode node;
    node.span = Span{b, e};
    node.head = j;
    auto left = backtrack(c, h, b, j, false);
    auto right = backtrack(c, h, j + 1, e, false);
    node.children = std::move(left);
    for (auto& r : right) node.children.push_back(std::move(r));
    return {std::move(node)};
  }
  const int j = c.excl_j[i];
  auto left = backtrack(c, h, b, j, false);
  auto right = backtrack(c, h, j, e, false);
  for (auto& r : right) left.push_back(std::move(r));
  return left;
}

}  // namespace

Dpst f1_aggregate(const HitCountTable& h) {
  const int n = h.n;
  if (n < 1) throw std::invalid_argument("f1_aggregate: empty sentence");

  F1Chart c(n);
  for (int len = 1; len <= n; ++len) {
    for (int b = 1; b + len <= n + 1; ++b) {
      const int e = b + len;
      const int i = c.idx(b, e);
      const std::int64_t hit = h.at(Span{b, e});
      for (int j = b; j < e; ++j) {
        const std::int64_t s = c.total[c.idx(b, j)] + hit + c.total[c.idx(j + 1, e)];
        if (s > c.incl[i]) {
          c.incl[i] = s;
          c.incl_j[i] = j;
        }
      }
      for (int j = b + 1; j < e; ++j) {
        const std::int64_t s = c.total[c.idx(b, j)] + c.total[c.idx(j, e)];
        if (s > c.excl[i]) {
          c.excl[i] = s;
          c.excl_j[i] = j;
        }
      }
      if (c.incl[i] >= c.excl[i]) {
        c.total[i] = c.incl[i];
        c.use_incl[i] = 1;
      } else {
        c.total[i] = c.excl[i];
        c.use_incl[i] = 0;
      }
    }
  }

  Dpst tree;
  tree.n = n;
  tree.root = std::move(backtrack(c, h, 1, n + 1, true)[0]);
  return tree;
}

std::int64_t f1_score_of(const HitCountTable& h, const Dpst& tree) {
  std::int64_t score = 0;
  for (const Span& c : extract_phrases(tree)) score += h.at(c);
  return score;
}

CorpusFile aggregate_corpus_f1(const std::vector<const CorpusFile*>& outputs,
                               const std::vector<Rational>& weights, int jobs,
                               std::vector<std::string>* warnings) {
  if (outputs.empty()) throw std::invalid_argument("aggregate_corpus_f1: no inputs");
  const auto report = check_alignment(outputs);
  if (!report.ok) throw std::invalid_argument("misaligned inputs: " + report.message);

  std::vector<Rational> w = weights;
  if (w.empty()) w.assign(outputs.size(), Rational{1});
  if (w.size() != outputs.size())
    throw std::invalid_argument("aggregate_corpus_f1: weights count mismatch");

  const std::size_t num_sentences = outputs[0]->size();
  std::vector<HeadVector> result(num_sentences);
  std::vector<std::vector<std::string>> warn(num_sentences);

  auto work = [&](std::size_t s) {
    std::vector<HeadVector> parses;
    parses.reserve(outputs.size());
    for (const CorpusFile* f : outputs) parses.push_back(f->sentences[s].heads);
    std::vector<std::size_t> skipped;
    const auto table = build_hit_counts(parses, w, &skipped);
    for (std::size_t k : skipped)
      warn[s].push_back("sentence " + outputs[0]->sentences[s].sentence.id +
                        ": individual " + outputs[k]->source +
                        " skipped (not projective single-root)");
    result[s] = dpst_to_heads(f1_aggregate(table));
  };

  if (jobs <= 1 || num_sentences < 2) {
    for (std::size_t s = 0; s < num_sentences; ++s) work(s);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t s = next.fetch_add(1); s < num_sentences; s = next.fetch_add(1))
        work(s);
    };
    std::vector<std::thread> pool;
    const int t = std::min<std::size_t>(jobs, num_sentences);
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (warnings)
    for (auto& ws : warn)
      for (auto& m : ws) warnings->push_back(std::move(m));
  return with_heads(*outputs[0], result, "<ensemble-f1>");
}

}  // namespace depens
