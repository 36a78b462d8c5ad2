#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/categorize.hpp"
#include "splitkit/conllu.hpp"
#include "splitkit/filter.hpp"
#include "splitkit/jsonl.hpp"
#include "splitkit/tree.hpp"
#include "splitkit/types.hpp"

namespace splitkit {

struct StageSummary {
  std::size_t records_in = 0;
  std::size_t records_out = 0;
  std::map<std::string, std::size_t> counters;  // rejection reasons, categories, skips
  std::vector<std::string> record_errors;       // per-record problems, non-fatal
};

// Deterministic parallel map: records are processed in shards and results
// assembled in input order, so jobs > 1 never changes the output.
std::vector<PairRecord> parallel_map_records(
    std::vector<PairRecord> records, std::size_t jobs,
    const std::function<PairRecord(PairRecord)>& fn);

// CoNLL-U sidecar sentences are keyed "<record-id>.long", "<id>.s1",
// "<id>.s2". Records missing annotations fall back to the token-level
// checks run_filters supports.
std::vector<PairRecord> filter_records(std::vector<PairRecord> records,
                                       const std::map<std::string, ConlluSentence>& annotations,
                                       const FilterConfig& cfg, std::size_t jobs,
                                       StageSummary& summary);

// Assigns categories to Filtered records from a tree sidecar keyed by
// record id. Records without a tree are counted and passed through.
std::vector<PairRecord> categorize_records(std::vector<PairRecord> records,
                                           const std::map<std::string, ConstituencyTree>& trees,
                                           const CategorizeConfig& cfg, std::size_t jobs,
                                           StageSummary& summary);

// Builds padded sequences and delta for categorized records.
std::vector<PairRecord> label_records(std::vector<PairRecord> records, std::size_t min_copy_run,
                                      std::size_t jobs, StageSummary& summary);

std::string format_summary(const std::string& stage, const StageSummary& summary);

}  // namespace splitkit
