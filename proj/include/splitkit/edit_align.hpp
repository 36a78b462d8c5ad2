#pragma once

#include <utility>

#include "splitkit/diff.hpp"
#include "splitkit/types.hpp"

namespace splitkit {

struct SplitPositions {
  std::size_t split_x = 0;  // x index of the split-adjacent edit (or insertion boundary)
  std::size_t split_y = 0;  // y index of the [SEP] token
};

// split_y is the position of the single [SEP] in y. split_x is the x start
// of the edit region whose y-span covers the [SEP]; when no region covers
// it, the region nearest to it (ties leftmost). Throws if y does not
// contain exactly one [SEP].
SplitPositions locate_split(const DiffScript& diff, const std::vector<std::string>& y);

// Pads x and y to a common length around the split. The split token at
// split_x / split_y closes the pre-split segment; pads attach after the
// shorter pre-split segment and before the shorter post-split segment, so
// both padded sequences share the same segment boundary. Token positions at
// or before the split indices are unchanged.
EditAlignment pad_align(const std::vector<std::string>& x, const std::vector<std::string>& y,
                        std::size_t split_x, std::size_t split_y);

// Fills delta per category, keyed on the [SEP] position:
//   DirectInsertion       — ones at the split and its two neighbours;
//   ChangesNearSplit      — a contiguous window grown outward from the
//                           split, stopping at a copy run of >= 3 positions
//                           (or one that reaches the sequence boundary);
//   ChangesAcrossSentence — all ones.
EditAlignment build_delta(SplitCategory category, EditAlignment alignment,
                          std::size_t min_copy_run = 3);

// diff -> locate -> pad -> delta for one record's token sequences.
EditAlignment align_pair(const std::vector<std::string>& x, const std::vector<std::string>& y,
                         SplitCategory category, std::size_t min_copy_run = 3);

// Rejects sequences that already contain the reserved [SEP]/[PAD] literals.
void check_reserved_tokens(const std::vector<std::string>& raw_tokens);

}  // namespace splitkit
