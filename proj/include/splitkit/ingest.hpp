#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/types.hpp"

namespace splitkit {

// One sentence alignment between the two sides of a bitext. Indices are
// 0-based line numbers, strictly increasing within each side.
struct AlignmentRecord {
  std::vector<std::size_t> src_indices;
  std::vector<std::size_t> tgt_indices;
  std::string doc_id;
};

struct ResolvedAlignment {
  AlignmentRecord alignment;
  std::vector<std::string> src_texts;
  std::vector<std::string> tgt_texts;
};

struct IngestError {
  std::size_t line_no = 0;  // in the alignment file
  std::string message;
};

// Alignment file: one alignment per line, "i j - k" style 0-based index
// lists separated by "-". Lines starting with "# doc " set the document id
// for the following alignments. Out-of-range indices become record-level
// errors; a hard parse failure throws.
std::vector<ResolvedAlignment> load_bitext(const std::string& src_path,
                                           const std::string& tgt_path,
                                           const std::string& align_path,
                                           std::vector<IngestError>* errors = nullptr);

AlignmentRecord parse_alignment_line(const std::string& line);  // throws on bad syntax

// Two-column TSV sidecar: segment-id <TAB> English text. Segment ids are
// "src:<line>" / "tgt:<line>" with 0-based line numbers.
std::map<std::string, std::string> load_translations(const std::string& path);

enum class EnglishSide { Src, Tgt };

struct IngestOptions {
  EnglishSide english_side = EnglishSide::Src;
  std::string pivot_language;  // language code of the non-English side
  std::string source_corpus;
  std::string id_prefix = "pair";
};

struct IngestResult {
  std::vector<PairRecord> pairs;
  std::map<std::string, std::size_t> drop_counts;  // reason -> count
  std::vector<IngestError> errors;
};

// Keeps only 1-2 and 2-1 alignments. The single-sentence side becomes the
// long sentence, the two-sentence side the split; non-English segments are
// replaced by their sidecar translation. Alignments of any other shape are
// dropped under a counted reason; a missing translation is a record-level
// error.
IngestResult select_one_to_two(const std::vector<ResolvedAlignment>& records,
                               const std::map<std::string, std::string>& translations,
                               const IngestOptions& opts);

}  // namespace splitkit
