#pragma once

#include <string>
#include <vector>

namespace splitkit {

enum class DiffOpKind { Copy, Delete, Insert };

struct DiffOp {
  DiffOpKind kind;
  std::vector<std::string> tokens;
};

// Edit script between two token sequences. Concatenating Copy+Delete spans
// reproduces x; Copy+Insert spans reproduce y.
struct DiffScript {
  std::vector<DiffOp> ops;

  std::vector<std::string> reconstruct_x() const;
  std::vector<std::string> reconstruct_y() const;
};

// Recursive longest-common-substring diff: the longest common contiguous
// block is kept, then both remainders are diffed. Ties go to the earliest
// start in x, then the earliest start in y. Deletions precede insertions.
DiffScript token_diff(const std::vector<std::string>& x, const std::vector<std::string>& y);

// A diff op annotated with its half-open spans in x and y. Insert ops have
// an empty x-span at the insertion point, deletes an empty y-span.
struct SpannedOp {
  DiffOpKind kind;
  std::size_t x_begin = 0, x_end = 0;
  std::size_t y_begin = 0, y_end = 0;
  std::vector<std::string> tokens;
};

std::vector<SpannedOp> with_spans(const DiffScript& script);

// Maximal runs of adjacent non-Copy ops, merged into single edit regions.
struct EditRegion {
  std::size_t x_begin = 0, x_end = 0;
  std::size_t y_begin = 0, y_end = 0;
  std::vector<std::string> deleted;
  std::vector<std::string> inserted;
};

std::vector<EditRegion> edit_regions(const DiffScript& script);

}  // namespace splitkit
