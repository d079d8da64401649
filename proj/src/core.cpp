#include "depens/core.hpp"

#include <algorithm>
#include <sstream>

namespace depens {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::int64_t n = std::stoll(s.substr(0, slash));
    const std::int64_t d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(s));
  const std::string whole = s.substr(0, dot);
  const std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 15 ||
      !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("rational: bad decimal '" + s + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
  return Rational(w * den + std::stoll(frac), den);
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool ValidationReport::has(Violation v) const {
  return std::find(violations.begin(), violations.end(), v) != violations.end();
}

std::string violation_name(Violation v) {
  switch (v) {
    case Violation::LengthMismatch: return "length-mismatch";
    case Violation::SelfLoop: return "self-loop";
    case Violation::HeadOutOfRange: return "head-out-of-range";
    case Violation::Cycle: return "cycle";
    case Violation::MultiRoot: return "multi-root";
    case Violation::NoRoot: return "no-root";
    case Violation::NonProjective: return "non-projective";
  }
  return "unknown";
}

bool is_tree(const HeadVector& parse) {
  const int n = static_cast<int>(parse.size());
  for (int j = 1; j <= n; ++j) {
    const int h = parse[j - 1];
    if (h == j || h < 0 || h > n) return false;
  }
  // walk up from every word; a walk longer than n steps means a cycle
  for (int j = 1; j <= n; ++j) {
    int cur = j;
    int steps = 0;
    while (cur != 0) {
      cur = parse[cur - 1];
      if (++steps > n) return false;
    }
  }
  return true;
}

bool is_projective(std::size_t sentence_len, const HeadVector& parse) {
  const int n = static_cast<int>(sentence_len);
  if (parse.size() != sentence_len || !is_tree(parse)) return false;
  // yield intervals by propagation: each word's interval must absorb all
  // its descendants; then check no foreign word falls inside an interval
  std::vector<int> lo(n + 1), hi(n + 1);
  for (int j = 1; j <= n; ++j) lo[j] = hi[j] = j;
  for (int j = 1; j <= n; ++j) {
    int cur = parse[j - 1];
    while (cur != 0) {
      lo[cur] = std::min(lo[cur], j);
      hi[cur] = std::max(hi[cur], j);
      cur = parse[cur - 1];
    }
  }
  // word w lies inside [lo[u], hi[u]] iff w is a descendant of u (or u itself)
  for (int u = 1; u <= n; ++u) {
    for (int w = lo[u]; w <= hi[u]; ++w) {
      if (w == u) continue;
      int cur = w;
      bool descendant = false;
      while (cur != 0) {
        cur = parse[cur - 1];
        if (cur == u) { descendant = true; break; }
      }
      if (!descendant) return false;
    }
  }
  return true;
}

bool is_single_root(const HeadVector& parse) {
  return std::count(parse.begin(), parse.end(), 0) == 1;
}

ValidationReport validate(const HeadVector& parse, std::size_t sentence_len) {
  ValidationReport report;
  const int n = static_cast<int>(sentence_len);
  if (parse.size() != sentence_len) {
    report.violations.push_back(Violation::LengthMismatch);
    return report;
  }
  bool structural_ok = true;
  for (int j = 1; j <= n; ++j) {
    const int h = parse[j - 1];
    if (h == j) {
      report.violations.push_back(Violation::SelfLoop);
      structural_ok = false;
      break;
    }
    if (h < 0 || h > n) {
      report.violations.push_back(Violation::HeadOutOfRange);
      structural_ok = false;
      break;
    }
  }
  if (!structural_ok) return report;
  if (!is_tree(parse)) {
    report.violations.push_back(Violation::Cycle);
    return report;
  }
  const auto roots = std::count(parse.begin(), parse.end(), 0);
  if (roots == 0) report.violations.push_back(Violation::NoRoot);
  if (roots > 1) report.violations.push_back(Violation::MultiRoot);
  if (!is_projective(sentence_len, parse))
    report.violations.push_back(Violation::NonProjective);
  return report;
}

ValidationReport validate(const HeadVector& parse, const Sentence& sentence) {
  return validate(parse, sentence.size());
}

}  // namespace depens
