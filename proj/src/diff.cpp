#include "splitkit/diff.hpp"

#include <span>

namespace splitkit {

namespace {

using TokenSpan = std::span<const std::string>;

struct Block {
  std::size_t x_start = 0;
  std::size_t y_start = 0;
  std::size_t length = 0;
};

// Longest common contiguous block via the classic O(|x|*|y|) suffix table,
// rolled over one row. Tie-break: earliest start in x, then in y.
Block longest_common_block(TokenSpan x, TokenSpan y) {
  Block best;
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (x[i] == y[j]) {
        cur[j + 1] = prev[j] + 1;
        const std::size_t len = cur[j + 1];
        const std::size_t xs = i + 1 - len;
        const std::size_t ys = j + 1 - len;
        if (len > best.length ||
            (len == best.length && (xs < best.x_start || (xs == best.x_start && ys < best.y_start)))) {
          best = {xs, ys, len};
        }
      } else {
        cur[j + 1] = 0;
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

void diff_rec(TokenSpan x, TokenSpan y, std::vector<DiffOp>& out) {
  if (x.empty() && y.empty()) return;
  Block block = longest_common_block(x, y);
  if (block.length == 0) {
    if (!x.empty()) out.push_back({DiffOpKind::Delete, {x.begin(), x.end()}});
    if (!y.empty()) out.push_back({DiffOpKind::Insert, {y.begin(), y.end()}});
    return;
  }
  diff_rec(x.subspan(0, block.x_start), y.subspan(0, block.y_start), out);
  const auto common = x.subspan(block.x_start, block.length);
  out.push_back({DiffOpKind::Copy, {common.begin(), common.end()}});
  diff_rec(x.subspan(block.x_start + block.length), y.subspan(block.y_start + block.length), out);
}

}  // namespace

std::vector<std::string> DiffScript::reconstruct_x() const {
  std::vector<std::string> out;
  for (const auto& op : ops) {
    if (op.kind != DiffOpKind::Insert) out.insert(out.end(), op.tokens.begin(), op.tokens.end());
  }
  return out;
}

std::vector<std::string> DiffScript::reconstruct_y() const {
  std::vector<std::string> out;
  for (const auto& op : ops) {
    if (op.kind != DiffOpKind::Delete) out.insert(out.end(), op.tokens.begin(), op.tokens.end());
  }
  return out;
}

DiffScript token_diff(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  DiffScript script;
  diff_rec(TokenSpan(x), TokenSpan(y), script.ops);
  return script;
}

std::vector<SpannedOp> with_spans(const DiffScript& script) {
  std::vector<SpannedOp> out;
  out.reserve(script.ops.size());
  std::size_t xi = 0, yi = 0;
  for (const auto& op : script.ops) {
    SpannedOp sp;
    sp.kind = op.kind;
    sp.tokens = op.tokens;
    sp.x_begin = xi;
    sp.y_begin = yi;
    switch (op.kind) {
      case DiffOpKind::Copy:
        xi += op.tokens.size();
        yi += op.tokens.size();
        break;
      case DiffOpKind::Delete:
        xi += op.tokens.size();
        break;
      case DiffOpKind::Insert:
        yi += op.tokens.size();
        break;
    }
    sp.x_end = xi;
    sp.y_end = yi;
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<EditRegion> edit_regions(const DiffScript& script) {
  std::vector<EditRegion> regions;
  const auto spans = with_spans(script);
  for (std::size_t i = 0; i < spans.size();) {
    if (spans[i].kind == DiffOpKind::Copy) {
      ++i;
      continue;
    }
    EditRegion region;
    region.x_begin = spans[i].x_begin;
    region.y_begin = spans[i].y_begin;
    while (i < spans.size() && spans[i].kind != DiffOpKind::Copy) {
      region.x_end = spans[i].x_end;
      region.y_end = spans[i].y_end;
      auto& sink = spans[i].kind == DiffOpKind::Delete ? region.deleted : region.inserted;
      sink.insert(sink.end(), spans[i].tokens.begin(), spans[i].tokens.end());
      ++i;
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

}  // namespace splitkit
