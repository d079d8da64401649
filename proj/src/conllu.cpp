#include "depens/conllu.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace depens {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out;
}

bool plain_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<std::string> sent_id_comment(const std::vector<std::string>& comments) {
  for (const auto& c : comments) {
    // "# sent_id = xyz"
    auto pos = c.find("sent_id");
    if (pos == std::string::npos) continue;
    auto eq = c.find('=', pos);
    if (eq == std::string::npos) continue;
    auto start = c.find_first_not_of(" \t", eq + 1);
    if (start == std::string::npos) continue;
    auto end = c.find_last_not_of(" \t\r");
    return c.substr(start, end - start + 1);
  }
  return std::nullopt;
}

void finish_sentence(CorpusFile& corpus, std::vector<std::string>& comments,
                     std::vector<ConlluColumns>& columns, std::vector<int>& heads,
                     std::vector<Token>& tokens, int line_no) {
  if (tokens.empty()) {
    comments.clear();
    return;
  }
  CorpusSentence cs;
  const auto sid = sent_id_comment(comments);
  cs.sentence.id = sid ? *sid : std::to_string(corpus.sentences.size() + 1);
  cs.sentence.tokens = std::move(tokens);
  cs.heads = std::move(heads);
  cs.comments = std::move(comments);
  cs.columns = std::move(columns);
  const int n = static_cast<int>(cs.sentence.tokens.size());
  for (int h : cs.heads)
    if (h < 0 || h > n)
      throw ParseError(line_no, "HEAD out of range in sentence " + cs.sentence.id);
  const auto report = validate(cs.heads, cs.sentence);
  for (Violation v : report.violations) {
    if (v == Violation::MultiRoot || v == Violation::NonProjective ||
        v == Violation::NoRoot) {
      corpus.warnings.push_back("sentence " + cs.sentence.id + ": " + violation_name(v));
    } else {
      throw ParseError(line_no, "malformed parse (" + violation_name(v) +
                                    ") in sentence " + cs.sentence.id);
    }
  }
  corpus.sentences.push_back(std::move(cs));
  tokens.clear();
  heads.clear();
  comments.clear();
  columns.clear();
}

}  // namespace

CorpusFile read_corpus(std::istream& in, bool strict, const std::string& source) {
  CorpusFile corpus;
  corpus.source = source;

  std::vector<std::string> comments;
  std::vector<ConlluColumns> columns;
  std::vector<int> heads;
  std::vector<Token> tokens;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(corpus, comments, columns, heads, tokens, line_no);
      continue;
    }
    if (line[0] == '#') {
      comments.push_back(line);
      continue;
    }
    auto fields = split_tabs(line);
    if (fields.size() != 10)
      throw ParseError(line_no, "expected 10 tab-separated columns, got " +
                                    std::to_string(fields.size()));
    const std::string& id = fields[0];
    if (!plain_integer(id)) {
      // multi-word-token ranges (1-2) and empty nodes (1.1)
      if (strict) throw ParseError(line_no, "unsupported token ID '" + id + "'");
      corpus.warnings.push_back("line " + std::to_string(line_no) +
                                ": skipped token ID '" + id + "'");
      continue;
    }
    const int idx = std::stoi(id);
    if (idx != static_cast<int>(tokens.size()) + 1)
      throw ParseError(line_no, "token ID " + id + " out of order (expected " +
                                    std::to_string(tokens.size() + 1) + ")");
    if (!plain_integer(fields[6]))
      throw ParseError(line_no, "non-integer HEAD '" + fields[6] + "'");

    Token tok;
    tok.index = idx;
    tok.form = fields[1];
    tok.pos = fields[3] != "_" ? fields[3] : (fields[4] != "_" ? fields[4] : "_");
    tokens.push_back(std::move(tok));
    heads.push_back(std::stoi(fields[6]));
    ConlluColumns cols;
    for (int i = 0; i < 10; ++i) cols[i] = std::move(fields[i]);
    columns.push_back(std::move(cols));
  }
  finish_sentence(corpus, comments, columns, heads, tokens, line_no + 1);
  return corpus;
}

CorpusFile read_corpus_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_corpus(in, strict, path);
}

void write_corpus(const CorpusFile& corpus, std::ostream& out) {
  for (const auto& cs : corpus.sentences) {
    for (const auto& c : cs.comments) out << c << '\n';
    for (std::size_t i = 0; i < cs.columns.size(); ++i) {
      const auto& cols = cs.columns[i];
      for (int f = 0; f < 10; ++f) {
        if (f) out << '\t';
        if (f == 6)
          out << cs.heads[i];
        else
          out << cols[f];
      }
      out << '\n';
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failure on corpus sink");
}

void write_corpus_file(const CorpusFile& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_corpus(corpus, out);
}

AlignmentReport check_alignment(const std::vector<const CorpusFile*>& files) {
  AlignmentReport report;
  if (files.empty()) {
    report.ok = false;
    report.message = "no files";
    return report;
  }
  const CorpusFile& first = *files[0];
  for (std::size_t f = 1; f < files.size(); ++f) {
    const CorpusFile& other = *files[f];
    if (other.size() != first.size()) {
      report.ok = false;
      report.message = other.source + ": " + std::to_string(other.size()) +
                       " sentences vs " + std::to_string(first.size()) + " in " +
                       first.source;
      return report;
    }
    for (std::size_t s = 0; s < first.size(); ++s) {
      if (other.sentences[s].sentence.size() != first.sentences[s].sentence.size()) {
        report.ok = false;
        report.message = other.source + ": sentence " + std::to_string(s + 1) + " has " +
                         std::to_string(other.sentences[s].sentence.size()) +
                         " tokens vs " +
                         std::to_string(first.sentences[s].sentence.size()) + " in " +
                         first.source;
        return report;
      }
    }
  }
  return report;
}

ParserOutput to_parser_output(const CorpusFile& corpus, const std::string& name,
                              Rational weight) {
  ParserOutput out;
  out.name = name;
  out.weight = weight;
  for (const auto& cs : corpus.sentences) {
    out.sentence_ids.push_back(cs.sentence.id);
    out.parses.push_back(cs.heads);
  }
  return out;
}

CorpusFile with_heads(const CorpusFile& tmpl, const std::vector<HeadVector>& heads,
                      const std::string& source) {
  if (heads.size() != tmpl.size())
    throw std::invalid_argument("with_heads: sentence count mismatch");
  CorpusFile out = tmpl;
  out.source = source;
  out.warnings.clear();
  for (std::size_t s = 0; s < heads.size(); ++s) {
    if (heads[s].size() != tmpl.sentences[s].sentence.size())
      throw std::invalid_argument("with_heads: length mismatch at sentence " +
                                  std::to_string(s + 1));
    out.sentences[s].heads = heads[s];
  }
  return out;
}

}  // namespace depens
