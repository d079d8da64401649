#ifndef DEPENS_CONLLU_HPP
#define DEPENS_CONLLU_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "depens/core.hpp"

namespace depens {

// One token line's raw 10 columns, kept verbatim for round-tripping.
using ConlluColumns = std::array<std::string, 10>;

struct CorpusSentence {
  Sentence sentence;
  HeadVector heads;
  std::vector<std::string> comments;  // verbatim '#' lines
  std::vector<ConlluColumns> columns;
};

struct CorpusFile {
  std::string source;
  std::vector<CorpusSentence> sentences;
  std::vector<std::string> warnings;

  std::size_t size() const { return sentences.size(); }
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct AlignmentReport {
  bool ok = true;
  std::string message;  // first mismatch, empty on success
};

// Reads the CoNLL-U subset: 10 tab-separated columns, '#' comments, blank
// line terminates a sentence. Only ID, FORM, UPOS (fallback XPOS) and HEAD
// are consumed. Range and decimal IDs are rejected in strict mode, skipped
// with a warning otherwise.
CorpusFile read_corpus(std::istream& in, bool strict = false,
                       const std::string& source = "<stream>");
CorpusFile read_corpus_file(const std::string& path, bool strict = false);

void write_corpus(const CorpusFile& corpus, std::ostream& out);
void write_corpus_file(const CorpusFile& corpus, const std::string& path);

// Equal sentence counts and per-sentence token counts across all files;
// differing forms only warn.
AlignmentReport check_alignment(const std::vector<const CorpusFile*>& files);

ParserOutput to_parser_output(const CorpusFile& corpus, const std::string& name,
                              Rational weight = Rational{1});

// Builds a corpus file from sentences and fresh head vectors, reusing the
// template's tokens and comments (used to emit aggregation results).
CorpusFile with_heads(const CorpusFile& tmpl, const std::vector<HeadVector>& heads,
                      const std::string& source);

}  // namespace depens

#endif
