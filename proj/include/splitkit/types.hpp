#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitkit {

// Reserved tokens. They may not appear in raw input sentences; the aligner
// inserts them when building padded sequences.
inline constexpr const char* kSepToken = "[SEP]";
inline constexpr const char* kPadToken = "[PAD]";

// A tokenized sentence with optional word-level annotations. When present,
// lemmas and upos are aligned 1:1 with tokens.
struct Sentence {
  std::string text;
  std::vector<std::string> tokens;
  std::optional<std::vector<std::string>> lemmas;
  std::optional<std::vector<std::string>> upos;

  bool annotations_consistent() const {
    if (lemmas && lemmas->size() != tokens.size()) return false;
    if (upos && upos->size() != tokens.size()) return false;
    return true;
  }
};

// How much rephrasing a split requires.
enum class SplitCategory {
  DirectInsertion,
  ChangesNearSplit,
  ChangesAcrossSentence,
};

const char* to_string(SplitCategory c);
std::optional<SplitCategory> split_category_from_string(const std::string& s);

// Source/target sequences padded to equal length around the split, plus the
// per-position binary edit labels. split_y always points at the [SEP] token
// in y_padded; split_x points at the split-adjacent edit in x_padded.
struct EditAlignment {
  std::vector<std::string> x_padded;
  std::vector<std::string> y_padded;
  std::size_t split_x = 0;
  std::size_t split_y = 0;
  std::vector<std::uint8_t> delta;
};

enum class PairStatus { Raw, Filtered, Rejected };

const char* to_string(PairStatus s);
std::optional<PairStatus> pair_status_from_string(const std::string& s);

// One aligned (long sentence, split pair) instance flowing through the
// pipeline. Rejected records are kept with their reason so filter statistics
// stay reproducible.
struct PairRecord {
  std::string id;
  Sentence longer;  // the single long sentence l
  std::array<Sentence, 2> split;
  std::string pivot_language;
  std::string source_corpus;
  std::map<std::string, double> scores;
  std::optional<SplitCategory> category;
  std::optional<EditAlignment> delta;
  PairStatus status = PairStatus::Raw;
  std::string reject_reason;  // non-empty iff status == Rejected
};

// Target-side token sequence for a record: s1 ++ [SEP] ++ s2.
std::vector<std::string> target_tokens(const PairRecord& rec);

}  // namespace splitkit
