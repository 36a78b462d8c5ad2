#include "splitkit/categorize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "splitkit/edit_align.hpp"
#include "splitkit/text.hpp"

namespace splitkit {

bool has_internal_colon_semicolon(const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == ":" || tokens[i] == ";") return true;
  }
  return false;
}

namespace {

bool is_ignorable_edit_token(const std::string& tok) {
  if (tok == kSepToken) return true;
  static const std::vector<std::string> punct = {".", "!", "?", ",", ";", ":"};
  return std::find(punct.begin(), punct.end(), tok) != punct.end();
}

// Lowercased multiset of the non-ignorable tokens in an edit side.
std::map<std::string, std::size_t> content_multiset(const std::vector<std::string>& tokens) {
  std::map<std::string, std::size_t> out;
  for (const auto& tok : tokens) {
    if (!is_ignorable_edit_token(tok)) ++out[lowercase(tok)];
  }
  return out;
}

}  // namespace

bool diff_contains_only_split(const std::vector<std::string>& x,
                              const std::vector<std::string>& y,
                              const CategorizeConfig& cfg) {
  const auto diff = token_diff(x, y);
  const auto regions = edit_regions(diff);
  if (regions.empty()) return false;  // no [SEP] inserted, no split at all
  SplitPositions pos;
  try {
    pos = locate_split(diff, y);
  } catch (const std::invalid_argument&) {
    return false;
  }
  std::vector<std::string> deleted, inserted;
  for (const auto& region : regions) {
    const std::size_t lo = region.x_begin;
    const std::size_t hi = region.x_end == region.x_begin ? region.x_begin : region.x_end - 1;
    const std::size_t dist = lo > pos.split_x ? lo - pos.split_x
                           : hi < pos.split_x ? pos.split_x - hi
                                              : 0;
    if (dist > cfg.split_neighborhood) return false;
    deleted.insert(deleted.end(), region.deleted.begin(), region.deleted.end());
    inserted.insert(inserted.end(), region.inserted.begin(), region.inserted.end());
  }
  return content_multiset(deleted) == content_multiset(inserted);
}

bool affixes_copied(const std::vector<std::string>& x, const std::vector<std::string>& y,
                    std::size_t affix_len) {
  if (x.size() < affix_len) return false;
  std::vector<bool> copied(x.size(), false);
  for (const auto& op : with_spans(token_diff(x, y))) {
    if (op.kind != DiffOpKind::Copy) continue;
    for (std::size_t i = op.x_begin; i < op.x_end; ++i) copied[i] = true;
  }
  for (std::size_t i = 0; i < affix_len; ++i) {
    if (!copied[i] || !copied[x.size() - 1 - i]) return false;
  }
  return true;
}

namespace {

std::vector<std::string> pattern_labels(const ConstituencyTree& tree) {
  auto labels = first_level_labels(tree, /*skip_punct=*/true);
  for (auto& label : labels) label = strip_label(label);
  return labels;
}

const std::vector<std::string> kPatternSCCS = {"S", "CC", "S"};
const std::vector<std::string> kPatternSNPVP = {"S", "NP", "VP"};
const std::vector<std::string> kPatternSBARNPVP = {"SBAR", "NP", "VP"};
const std::vector<std::string> kPatternVPCCVP = {"VP", "CC", "VP"};

}  // namespace

SplitCategory classify(const PairRecord& pair, const ConstituencyTree& tree_x,
                       const CategorizeConfig& cfg) {
  const auto& x = pair.longer.tokens;
  if (x.empty()) throw std::invalid_argument("classify: long sentence has no tokens");
  const auto y = target_tokens(pair);
  const auto labels = pattern_labels(tree_x);

  if (matches_pattern(labels, kPatternSCCS) || has_internal_colon_semicolon(x) ||
      diff_contains_only_split(x, y, cfg)) {
    return SplitCategory::DirectInsertion;
  }
  if (matches_pattern(labels, kPatternSNPVP) || matches_pattern(labels, kPatternSBARNPVP)) {
    return SplitCategory::ChangesAcrossSentence;
  }
  if (matches_pattern(labels, kPatternVPCCVP) || affixes_copied(x, y, cfg.copied_affix_len)) {
    return SplitCategory::ChangesNearSplit;
  }
  return SplitCategory::ChangesAcrossSentence;
}

std::size_t choose_split(const std::vector<std::size_t>& candidates,
                         const std::array<Sentence, 2>& reference) {
  if (candidates.empty()) throw std::invalid_argument("choose_split: no candidates");
  const std::size_t target = reference[0].tokens.size();
  const auto dist = [&](std::size_t c) { return c > target ? c - target : target - c; };
  std::size_t best = candidates.front();
  for (std::size_t cand : candidates) {
    if (dist(cand) < dist(best) || (dist(cand) == dist(best) && cand < best)) best = cand;
  }
  return best;
}

}  // namespace splitkit
