#pragma once

#include <vector>

#include "splitkit/diff.hpp"
#include "splitkit/tree.hpp"
#include "splitkit/types.hpp"

namespace splitkit {

struct CategorizeConfig {
  // "at least N words at the beginning and end of the sentence are copied"
  std::size_t copied_affix_len = 5;
  // Non-Copy edits may sit at most this many x positions from the split
  // for the differences to count as "only the split".
  std::size_t split_neighborhood = 3;
};

// Any ":" or ";" token of the long sentence outside the final position.
bool has_internal_colon_semicolon(const std::vector<std::string>& tokens);

// True iff every edit between x and y sits within the split neighborhood
// and changes nothing beyond sentence punctuation, the separator, and
// capitalization.
bool diff_contains_only_split(const std::vector<std::string>& x,
                              const std::vector<std::string>& y,
                              const CategorizeConfig& cfg = {});

// First and last copied_affix_len tokens of x all fall inside Copy ops.
bool affixes_copied(const std::vector<std::string>& x, const std::vector<std::string>& y,
                    std::size_t affix_len);

// Ordered rules, first match wins:
//   1. "S CC S" at the first tree level, an internal colon/semicolon, or a
//      diff that contains only the split     -> DirectInsertion
//   2. "S NP VP" or "SBAR NP VP"             -> ChangesAcrossSentence
//   3. "VP CC VP" or both 5-token affixes copied -> ChangesNearSplit
//   4. everything else                        -> ChangesAcrossSentence
// Pattern checks run on punctuation-skipped, suffix-stripped first-level
// labels; y is s1 ++ [SEP] ++ s2.
SplitCategory classify(const PairRecord& pair, const ConstituencyTree& tree_x,
                       const CategorizeConfig& cfg = {});

// Candidate split positions are left-segment lengths in x; picks the one
// closest to the reference first-sentence length, ties to the leftmost.
std::size_t choose_split(const std::vector<std::size_t>& candidates,
                         const std::array<Sentence, 2>& reference);

}  // namespace splitkit
