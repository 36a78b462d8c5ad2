#pragma once

#include <map>
#include <string>
#include <vector>

#include "splitkit/types.hpp"

namespace splitkit {

// Head-annotated dependency structure. Heads are 1-based token indices with
// 0 standing for the artificial root.
struct DependencyGraph {
  std::size_t n = 0;
  std::vector<int> heads;
  std::vector<std::string> deprels;
};

struct ConlluSentence {
  std::string sent_id;
  Sentence sentence;  // tokens + lemmas + upos filled from the columns
  DependencyGraph dep;
};

// Reads a CoNLL-U file keyed by "# sent_id = ..." comments. Multiword token
// ranges (id "3-4") and empty nodes (id "3.1") are skipped. Malformed lines
// and duplicate ids throw with the offending line number.
std::map<std::string, ConlluSentence> read_conllu(const std::string& path);
std::map<std::string, ConlluSentence> read_conllu_stream(std::istream& in,
                                                         const std::string& name = "<stream>");

// Copies lemma/upos annotations onto a sentence whose tokens match.
// Token-count mismatch throws.
void apply_annotations(Sentence& sentence, const ConlluSentence& ann);

}  // namespace splitkit
