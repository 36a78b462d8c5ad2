#pragma once

#include <optional>
#include <set>
#include <string>

#include "splitkit/conllu.hpp"
#include "splitkit/types.hpp"

namespace splitkit {

// Rejection reasons recorded by run_filters, in the order checks run.
namespace reject {
inline constexpr const char* kIntratokenPunct = "intratoken_punct";
inline constexpr const char* kDisconnectedParse = "disconnected_parse";
inline constexpr const char* kLowOverlap = "low_overlap";
inline constexpr const char* kNoVerb = "no_verb";
inline constexpr const char* kLowSimilarity = "low_similarity";
}  // namespace reject

struct FilterConfig {
  double min_overlap = 0.25;
  double min_similarity = 0.4;
  bool require_verb = true;
  // Verb check behaviour when upos annotations are absent.
  bool missing_pos_fails = false;
  // Compute a token-level F1 when no similarity score is supplied. This is
  // a lexical stand-in, not a semantic score; disable to skip the
  // similarity check on unscored records.
  bool token_f1_fallback = true;
};

// True iff some token contains a punctuation character with at least two
// alphabetic characters before it and at least two after it, all within the
// same token ("ramp.The" yes, "U.S." no).
bool has_intratoken_punct(const Sentence& sentence);
bool token_has_intratoken_punct(const std::string& token);

// True iff the undirected head-dependent graph forms a single connected
// component over all tokens.
bool is_connected(const DependencyGraph& dep);

// Unique lemmas of a sentence, lowercased surface forms when lemmas are
// absent. used_fallback reports which source was taken.
std::set<std::string> lemma_set(const Sentence& sentence, bool* used_fallback = nullptr);

// r = min over the two per-split overlap ratios and the union ratio.
// Throws std::invalid_argument on an empty lemma set.
double overlap_ratio(const Sentence& longer, const Sentence& s1, const Sentence& s2);

// Any token tagged VERB or AUX.
bool contains_verb(const Sentence& sentence);

// Token-level F1 between the long sentence and the concatenated split,
// on lowercased token multisets. Not a semantic similarity.
double token_f1_similarity(const PairRecord& rec);

// Applies the noise cascade in order: intra-token punctuation,
// dependency connectivity (when a graph is supplied), lexical overlap,
// verb presence, similarity threshold. The first failure is recorded as
// the rejection reason; overlap and similarity scores are stored either way.
PairRecord run_filters(PairRecord pair, const FilterConfig& cfg,
                       std::optional<double> sim = std::nullopt,
                       const DependencyGraph* long_dep = nullptr);

}  // namespace splitkit
