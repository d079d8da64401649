#include "depens/mbr.hpp"

#include "depens/uas.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace depens {

namespace {

std::atomic<std::int64_t> g_decode_count{0};

constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;

}  // namespace

std::int64_t decode_count() { return g_decode_count.load(); }
void reset_decode_count() { g_decode_count.store(0); }

VoteMatrix build_vote_matrix(const std::vector<HeadVector>& parses,
                             const std::vector<Rational>& weights) {
  if (parses.empty()) throw std::invalid_argument("build_vote_matrix: no parses");
  if (parses.size() != weights.size())
    throw std::invalid_argument("build_vote_matrix: weights/parses size mismatch");
  const int n = static_cast<int>(parses[0].size());
  for (const auto& p : parses)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("build_vote_matrix: parse length mismatch");

  std::int64_t scale = 1;
  bool any_positive = false;
  for (const auto& w : weights) {
    scale = std::lcm(scale, w.den);
    if (w.num > 0) any_positive = true;
  }
  if (!any_positive) throw std::invalid_argument("build_vote_matrix: all weights zero");

  VoteMatrix v;
  v.n = n;
  v.scale = scale;
  v.votes.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t k = 0; k < parses.size(); ++k) {
    const std::int64_t w = weights[k].num * (scale / weights[k].den);
    if (w == 0) continue;
    for (int j = 1; j <= n; ++j) {
      const int a = parses[k][j - 1];
      if (a < 0 || a > n || a == j)
        throw std::invalid_argument("build_vote_matrix: bad head index");
      v.votes[a][j] += w;
    }
  }
  return v;
}

std::int64_t decode_score(const VoteMatrix& v, const HeadVector& parse) {
  if (static_cast<int>(parse.size()) != v.n)
    throw std::invalid_argument("decode_score: length mismatch");
  std::int64_t score = 0;
  for (int j = 1; j <= v.n; ++j) score += v.votes[parse[j - 1]][j];
  return score;
}

namespace {

// First-order Eisner chart. dir 0 = rightward (left index is head),
// dir 1 = leftward (right index is head).
struct Chart {
  int n;
  std::vector<std::int64_t> inc[2], com[2];
  std::vector<int> inc_bp[2], com_bp[2];

  explicit Chart(int n_) : n(n_) {
    for (int d = 0; d < 2; ++d) {
      inc[d].assign((n + 1) * (n + 1), kNegInf);
      com[d].assign((n + 1) * (n + 1), kNegInf);
      inc_bp[d].assign((n + 1) * (n + 1), -1);
      com_bp[d].assign((n + 1) * (n + 1), -1);
    }
  }
  int idx(int i, int j) const { return i * (n + 1) + j; }
};

void recover(const Chart& c, bool incomplete, int dir, int i, int j, HeadVector& heads) {
  if (incomplete) {
    if (dir == 0)
      heads[j - 1] = i;
    else
      heads[i - 1] = j;
    const int k = c.inc_bp[dir][c.idx(i, j)];
    recover(c, false, 0, i, k, heads);
    recover(c, false, 1, k + 1, j, heads);
  } else {
    if (i == j) return;
    const int k = c.com_bp[dir][c.idx(i, j)];
    if (dir == 0) {
      recover(c, true, 0, i, k, heads);
      recover(c, false, 0, k, j, heads);
    } else {
      recover(c, false, 1, i, k, heads);
      recover(c, true, 1, k, j, heads);
    }
  }
}

}  // namespace

HeadVector eisner_decode(const VoteMatrix& v) {
  g_decode_count.fetch_add(1, std::memory_order_relaxed);
  const int n = v.n;
  if (n == 0) throw std::invalid_argument("eisner_decode: empty sentence");
  if (n == 1) return HeadVector{0};

  Chart c(n);
  for (int i = 1; i <= n; ++i) {
    c.com[0][c.idx(i, i)] = 0;
    c.com[1][c.idx(i, i)] = 0;
  }
  for (int len = 1; len < n; ++len) {
    for (int i = 1; i + len <= n; ++i) {
      const int j = i + len;
      // incomplete spans: arc between the endpoints
      for (int k = i; k < j; ++k) {
        const std::int64_t base = c.com[0][c.idx(i, k)] + c.com[1][c.idx(k + 1, j)];
        if (base + v.votes[i][j] > c.inc[0][c.idx(i, j)]) {
          c.inc[0][c.idx(i, j)] = base + v.votes[i][j];
          c.inc_bp[0][c.idx(i, j)] = k;
        }
        if (base + v.votes[j][i] > c.inc[1][c.idx(i, j)]) {
          c.inc[1][c.idx(i, j)] = base + v.votes[j][i];
          c.inc_bp[1][c.idx(i, j)] = k;
        }
      }
      // complete spans
      for (int k = i + 1; k <= j; ++k) {
        const std::int64_t s = c.inc[0][c.idx(i, k)] + c.com[0][c.idx(k, j)];
        if (s > c.com[0][c.idx(i, j)]) {
          c.com[0][c.idx(i, j)] = s;
          c.com_bp[0][c.idx(i, j)] = k;
        }
      }
      for (int k = i; k < j; ++k) {
        const std::int64_t s = c.com[1][c.idx(i, k)] + c.inc[1][c.idx(k, j)];
        if (s > c.com[1][c.idx(i, j)]) {
          c.com[1][c.idx(i, j)] = s;
          c.com_bp[1][c.idx(i, j)] = k;
        }
      }
    }
  }

  // exactly one ROOT dependent: pick the best root word r
  int best_root = 1;
  std::int64_t best = kNegInf;
  for (int r = 1; r <= n; ++r) {
    const std::int64_t s = v.votes[0][r] + c.com[1][c.idx(1, r)] + c.com[0][c.idx(r, n)];
    if (s > best) {
      best = s;
      best_root = r;
    }
  }

  HeadVector heads(n, -1);
  heads[best_root - 1] = 0;
  recover(c, false, 1, 1, best_root, heads);
  recover(c, false, 0, best_root, n, heads);
  return heads;
}

CorpusFile aggregate_corpus(const std::vector<const CorpusFile*>& outputs,
                            const std::vector<Rational>& weights, int jobs) {
  if (outputs.empty()) throw std::invalid_argument("aggregate_corpus: no inputs");
  const auto report = check_alignment(outputs);
  if (!report.ok) throw std::invalid_argument("misaligned inputs: " + report.message);

  std::vector<Rational> w = weights;
  if (w.empty()) w.assign(outputs.size(), Rational{1});
  if (w.size() != outputs.size())
    throw std::invalid_argument("aggregate_corpus: weights count mismatch");

  const std::size_t num_sentences = outputs[0]->size();
  std::vector<HeadVector> result(num_sentences);

  auto work = [&](std::size_t s) {
    std::vector<HeadVector> parses;
    parses.reserve(outputs.size());
    for (const CorpusFile* f : outputs) parses.push_back(f->sentences[s].heads);
    result[s] = eisner_decode(build_vote_matrix(parses, w));
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
  return with_heads(*outputs[0], result, "<ensemble>");
}

std::vector<Rational> weights_from_validation(
    const std::vector<const CorpusFile*>& outputs, const CorpusFile& gold, int digits) {
  std::int64_t den = 1;
  for (int i = 0; i < digits; ++i) den *= 10;
  std::vector<Rational> weights;
  weights.reserve(outputs.size());
  for (const CorpusFile* f : outputs) {
    const double uas = corpus_uas(*f, gold);
    weights.emplace_back(static_cast<std::int64_t>(uas * den + 0.5), den);
  }
  return weights;
}

}  // namespace depens
