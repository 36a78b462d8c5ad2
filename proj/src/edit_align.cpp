#include "splitkit/edit_align.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitkit {

void check_reserved_tokens(const std::vector<std::string>& raw_tokens) {
  for (const auto& tok : raw_tokens) {
    if (tok == kSepToken || tok == kPadToken) {
      throw std::invalid_argument("reserved token in raw input: " + tok);
    }
  }
}

SplitPositions locate_split(const DiffScript& diff, const std::vector<std::string>& y) {
  std::size_t sep_count = 0;
  std::size_t sep_pos = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == kSepToken) {
      ++sep_count;
      sep_pos = i;
    }
  }
  if (sep_count == 0) throw std::invalid_argument("locate_split: y contains no [SEP]");
  if (sep_count > 1) throw std::invalid_argument("locate_split: y contains multiple [SEP]");

  const auto regions = edit_regions(diff);
  if (regions.empty()) {
    // y == x would need no split token; unreachable when [SEP] is present.
    throw std::invalid_argument("locate_split: diff contains no edits but y has a [SEP]");
  }
  const EditRegion* chosen = nullptr;
  std::size_t best_dist = 0;
  for (const auto& region : regions) {
    if (region.y_begin <= sep_pos && sep_pos < region.y_end) {
      chosen = &region;
      break;
    }
    std::size_t dist;
    if (sep_pos < region.y_begin) {
      dist = region.y_begin - sep_pos;
    } else {
      dist = sep_pos - (region.y_end == 0 ? 0 : region.y_end - 1);
    }
    if (chosen == nullptr || dist < best_dist) {
      chosen = &region;
      best_dist = dist;
    }
  }
  return {chosen->x_begin, sep_pos};
}

EditAlignment pad_align(const std::vector<std::string>& x, const std::vector<std::string>& y,
                        std::size_t split_x, std::size_t split_y) {
  if (split_y >= y.size()) throw std::invalid_argument("pad_align: split_y out of range");
  // Pre-split segments include the split token itself; an insertion
  // boundary at the very end of x degenerates to the whole sequence.
  const std::size_t x_pre = std::min(split_x + 1, x.size());
  const std::size_t y_pre = split_y + 1;
  const std::size_t pre_len = std::max(x_pre, y_pre);
  const std::size_t x_post = x.size() - x_pre;
  const std::size_t y_post = y.size() - y_pre;
  const std::size_t post_len = std::max(x_post, y_post);

  auto pad_one = [&](const std::vector<std::string>& seq, std::size_t pre) {
    std::vector<std::string> out;
    out.reserve(pre_len + post_len);
    out.insert(out.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(pre));
    out.insert(out.end(), pre_len - pre, kPadToken);
    out.insert(out.end(), post_len - (seq.size() - pre), kPadToken);
    out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(pre), seq.end());
    return out;
  };

  EditAlignment a;
  a.x_padded = pad_one(x, x_pre);
  a.y_padded = pad_one(y, y_pre);
  a.split_x = split_x;
  a.split_y = split_y;
  return a;
}

EditAlignment build_delta(SplitCategory category, EditAlignment alignment,
                          std::size_t min_copy_run) {
  const std::size_t n = alignment.x_padded.size();
  if (alignment.y_padded.size() != n) {
    throw std::invalid_argument("build_delta: padded sequences differ in length");
  }
  if (alignment.split_y >= n || alignment.y_padded[alignment.split_y] != kSepToken) {
    throw std::invalid_argument("build_delta: split_y does not point at [SEP]");
  }
  alignment.delta.assign(n, 0);
  const std::size_t split = alignment.split_y;

  switch (category) {
    case SplitCategory::ChangesAcrossSentence:
      alignment.delta.assign(n, 1);
      break;

    case SplitCategory::DirectInsertion:
      alignment.delta[split] = 1;
      if (split > 0) alignment.delta[split - 1] = 1;
      if (split + 1 < n) alignment.delta[split + 1] = 1;
      break;

    case SplitCategory::ChangesNearSplit: {
      alignment.delta[split] = 1;
      auto copied = [&](std::size_t i) {
        return alignment.x_padded[i] == alignment.y_padded[i];
      };
      // Rightward scan: modified positions extend the window; a copy run
      // ends it when the run has min_copy_run positions or touches the end.
      for (std::size_t i = split + 1; i < n;) {
        if (!copied(i)) {
          alignment.delta[i] = 1;
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < n && copied(j)) ++j;
        if (j - i >= min_copy_run || j == n) break;
        for (std::size_t k = i; k < j; ++k) alignment.delta[k] = 1;
        i = j;
      }
      // Leftward mirror.
      for (std::size_t i = split; i > 0;) {
        const std::size_t pos = i - 1;
        if (!copied(pos)) {
          alignment.delta[pos] = 1;
          --i;
          continue;
        }
        std::size_t run_begin = pos;  // maximal copy run [run_begin, i)
        while (run_begin > 0 && copied(run_begin - 1)) --run_begin;
        if (i - run_begin >= min_copy_run || run_begin == 0) break;
        for (std::size_t k = run_begin; k < i; ++k) alignment.delta[k] = 1;
        i = run_begin;
      }
      break;
    }
  }
  return alignment;
}

EditAlignment align_pair(const std::vector<std::string>& x, const std::vector<std::string>& y,
                         SplitCategory category, std::size_t min_copy_run) {
  check_reserved_tokens(x);
  const auto diff = token_diff(x, y);
  const auto pos = locate_split(diff, y);
  auto alignment = pad_align(x, y, pos.split_x, pos.split_y);
  return build_delta(category, std::move(alignment), min_copy_run);
}

}  // namespace splitkit
