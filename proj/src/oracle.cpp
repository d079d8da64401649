#include "depens/oracle.hpp"

#include <stdexcept>

namespace depens {
namespace oracle {

namespace {

using Arc = std::pair<int, int>;  // (dependent, head)

struct TreeFrag {
  int root = 0;
  std::vector<Arc> arcs;  // arcs among span words, root's head unassigned
};

struct ForestFrag {
  std::vector<int> roots;
  std::vector<Arc> arcs;
};

std::vector<TreeFrag> span_trees(int b, int e);

// forests: partitions of [b,e) into consecutive spans, one tree each
std::vector<ForestFrag> span_forests(int b, int e) {
  if (b == e) return {ForestFrag{}};
  std::vector<ForestFrag> out;
  for (int m = b + 1; m <= e; ++m) {
    const auto firsts = span_trees(b, m);
    const auto rests = span_forests(m, e);
    for (const auto& t : firsts) {
      for (const auto& rest : rests) {
        ForestFrag f;
        f.roots.push_back(t.root);
        f.roots.insert(f.roots.end(), rest.roots.begin(), rest.roots.end());
        f.arcs = t.arcs;
        f.arcs.insert(f.arcs.end(), rest.arcs.begin(), rest.arcs.end());
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

std::vector<TreeFrag> span_trees(int b, int e) {
  std::vector<TreeFrag> out;
  for (int r = b; r < e; ++r) {
    const auto lefts = span_forests(b, r);
    const auto rights = span_forests(r + 1, e);
    for (const auto& lf : lefts) {
      for (const auto& rf : rights) {
        TreeFrag t;
        t.root = r;
        t.arcs = lf.arcs;
        t.arcs.insert(t.arcs.end(), rf.arcs.begin(), rf.arcs.end());
        for (int d : lf.roots) t.arcs.emplace_back(d, r);
        for (int d : rf.roots) t.arcs.emplace_back(d, r);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<HeadVector> enumerate_projective_parses(int n) {
  if (n < 1 || n > kMaxEnumerationLength)
    throw std::invalid_argument("enumerate_projective_parses: n out of guard range");
  std::vector<HeadVector> out;
  for (const auto& t : span_trees(1, n + 1)) {
    HeadVector heads(n, 0);
    for (const auto& [d, h] : t.arcs) heads[d - 1] = h;
    heads[t.root - 1] = 0;
    out.push_back(std::move(heads));
  }
  return out;
}

std::pair<HeadVector, std::int64_t> brute_force_uas_aggregate(
    const std::vector<HeadVector>& parses, const std::vector<Rational>& weights) {
  const auto v = build_vote_matrix(parses, weights);
  std::pair<HeadVector, std::int64_t> best{{}, -1};
  for (const auto& candidate : enumerate_projective_parses(v.n)) {
    const std::int64_t s = decode_score(v, candidate);
    if (s > best.second) best = {candidate, s};
  }
  return best;
}

std::pair<Dpst, std::int64_t> brute_force_f1_aggregate(const HitCountTable& h) {
  if (h.n < 1 || h.n > 6)
    throw std::invalid_argument("brute_force_f1_aggregate: n out of guard range");
  std::pair<Dpst, std::int64_t> best{{}, -1};
  for (const auto& candidate : enumerate_projective_parses(h.n)) {
    const Dpst tree = heads_to_dpst(candidate);
    const std::int64_t s = f1_score_of(h, tree);
    if (s > best.second) best = {tree, s};
  }
  return best;
}

}  // namespace oracle
}  // namespace depens
