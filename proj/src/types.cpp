#include "splitkit/types.hpp"

namespace splitkit {

const char* to_string(SplitCategory c) {
  switch (c) {
    case SplitCategory::DirectInsertion:
      return "direct_insertion";
    case SplitCategory::ChangesNearSplit:
      return "changes_near_split";
    case SplitCategory::ChangesAcrossSentence:
      return "changes_across_sentence";
  }
  return "changes_across_sentence";
}

std::optional<SplitCategory> split_category_from_string(const std::string& s) {
  if (s == "direct_insertion") return SplitCategory::DirectInsertion;
  if (s == "changes_near_split") return SplitCategory::ChangesNearSplit;
  if (s == "changes_across_sentence") return SplitCategory::ChangesAcrossSentence;
  return std::nullopt;
}

const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::Raw:
      return "raw";
    case PairStatus::Filtered:
      return "filtered";
    case PairStatus::Rejected:
      return "rejected";
  }
  return "raw";
}

std::optional<PairStatus> pair_status_from_string(const std::string& s) {
  if (s == "raw") return PairStatus::Raw;
  if (s == "filtered") return PairStatus::Filtered;
  if (s == "rejected") return PairStatus::Rejected;
  return std::nullopt;
}

std::vector<std::string> target_tokens(const PairRecord& rec) {
  std::vector<std::string> y;
  y.reserve(rec.split[0].tokens.size() + rec.split[1].tokens.size() + 1);
  y.insert(y.end(), rec.split[0].tokens.begin(), rec.split[0].tokens.end());
  y.push_back(kSepToken);
  y.insert(y.end(), rec.split[1].tokens.begin(), rec.split[1].tokens.end());
  return y;
}

}  // namespace splitkit
