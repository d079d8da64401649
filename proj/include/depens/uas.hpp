#ifndef DEPENS_UAS_HPP
#define DEPENS_UAS_HPP

#include <map>
#include <string>

#include "depens/conllu.hpp"
#include "depens/core.hpp"

namespace depens {

struct PosUas {
  double uas = 0.0;
  std::size_t support = 0;
};

double sentence_uas(const HeadVector& pred, const HeadVector& gold);

// Micro average: total matched heads over total words.
double corpus_uas(const CorpusFile& pred, const CorpusFile& gold);

// Words grouped by the dependent's gold POS tag; micro UAS per group.
std::map<std::string, PosUas> uas_by_pos(const CorpusFile& pred, const CorpusFile& gold);

}  // namespace depens

#endif
