#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace splitkit {

// Penn-Treebank style constituency tree. Leaves carry a surface token and
// have no children; internal nodes have at least one child.
struct ConstituencyTree {
  std::string label;
  std::vector<ConstituencyTree> children;
  std::optional<std::string> leaf_token;

  bool is_leaf() const { return leaf_token.has_value(); }
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

// Parses a bracketed tree. Whitespace-insensitive. A label-less outer
// wrapper "( (S ...) )" is unwrapped to its single child; anonymous nodes
// with several children get the label TOP.
ConstituencyTree parse_bracketed(const std::string& text);

std::string serialize(const ConstituencyTree& tree);

// True for labels consisting solely of punctuation characters, plus the
// -LRB-/-RRB- bracket tags.
bool is_punct_label(const std::string& label);

// Bare category: functional suffixes and indices are cut at the first
// hyphen or equals sign ("S-TPC-1" -> "S"). Bracket tags pass unchanged.
std::string strip_label(const std::string& label);

// Labels of the root's immediate children, optionally dropping
// punctuation-labeled children.
std::vector<std::string> first_level_labels(const ConstituencyTree& tree, bool skip_punct);

// True iff pattern occurs as a contiguous subsequence of labels. The empty
// pattern matches everything.
bool matches_pattern(const std::vector<std::string>& labels,
                     const std::vector<std::string>& pattern);

// Tree sidecar file: one "<id>\t<bracketed tree>" per line.
struct TreeFileEntry {
  std::string id;
  ConstituencyTree tree;
};
std::vector<TreeFileEntry> read_tree_file(const std::string& path);

}  // namespace splitkit
