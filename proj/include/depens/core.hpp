#ifndef DEPENS_CORE_HPP
#define DEPENS_CORE_HPP

#include <string>
#include <vector>

#include "depens/rational.hpp"

namespace depens {

struct Token {
  int index = 0;  // 1-based position
  std::string form;
  std::string pos;  // may be empty
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
};

// One sentence's parse: heads[j] is the head of word j+1, 0 denotes ROOT.
using HeadVector = std::vector<int>;

// A named individual's parses for every sentence of a corpus, in corpus
// order (alignment across individuals is positional).
struct ParserOutput {
  std::string name;
  std::vector<std::string> sentence_ids;
  std::vector<HeadVector> parses;
  Rational weight{1};
};

enum class Violation {
  LengthMismatch,
  SelfLoop,
  HeadOutOfRange,
  Cycle,
  MultiRoot,
  NoRoot,
  NonProjective,
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation v) const;
};

std::string violation_name(Violation v);

// True iff the parse is a well-formed tree (any number of root attachments,
// projectivity not required): no self-loops, heads in range, acyclic.
bool is_tree(const HeadVector& parse);

// True iff every word's yield (itself plus descendants) is a contiguous
// interval. Precondition: parse is a well-formed tree.
bool is_projective(std::size_t sentence_len, const HeadVector& parse);

// True iff exactly one word attaches to ROOT.
bool is_single_root(const HeadVector& parse);

// Reports every violated invariant; an empty report means the parse is a
// projective single-root tree of the right length.
ValidationReport validate(const HeadVector& parse, const Sentence& sentence);
ValidationReport validate(const HeadVector& parse, std::size_t sentence_len);

}  // namespace depens

#endif
