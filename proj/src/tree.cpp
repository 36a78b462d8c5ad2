#include "splitkit/tree.hpp"

#include <cctype>
#include <fstream>

#include "splitkit/text.hpp"

namespace splitkit {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
};

std::string read_atom(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.eof() && c.peek() != '(' && c.peek() != ')' &&
         !std::isspace(static_cast<unsigned char>(c.peek()))) {
    ++c.pos;
  }
  return c.s.substr(start, c.pos - start);
}

ConstituencyTree parse_node(Cursor& c) {
  const std::size_t open = c.pos;
  ++c.pos;  // consume '('
  c.skip_ws();
  ConstituencyTree node;
  if (!c.eof() && c.peek() != '(' && c.peek() != ')') {
    node.label = read_atom(c);
  }
  c.skip_ws();
  std::vector<std::string> leaf_atoms;
  while (!c.eof() && c.peek() != ')') {
    if (c.peek() == '(') {
      node.children.push_back(parse_node(c));
    } else {
      leaf_atoms.push_back(read_atom(c));
    }
    c.skip_ws();
  }
  if (c.eof()) throw ParseError("unbalanced '('", open);
  ++c.pos;  // consume ')'

  if (node.children.empty()) {
    if (node.label.empty()) throw ParseError("empty node", open);
    if (leaf_atoms.empty()) throw ParseError("leaf without token", open);
    // "(NN cat)" and the occasional multi-token leaf "(NN New York)".
    node.leaf_token = join(leaf_atoms);
    return node;
  }
  if (!leaf_atoms.empty()) {
    throw ParseError("mixed tokens and subtrees under one node", open);
  }
  if (node.label.empty()) {
    if (node.children.size() == 1) return std::move(node.children.front());
    node.label = "TOP";
  }
  return node;
}

void serialize_into(const ConstituencyTree& t, std::string& out) {
  out.push_back('(');
  out.append(t.label);
  if (t.is_leaf()) {
    out.push_back(' ');
    out.append(*t.leaf_token);
  } else {
    for (const auto& child : t.children) {
      out.push_back(' ');
      serialize_into(child, out);
    }
  }
  out.push_back(')');
}

}  // namespace

ConstituencyTree parse_bracketed(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.eof()) throw ParseError("empty input", 0);
  if (c.peek() != '(') throw ParseError("expected '('", c.pos);
  ConstituencyTree root = parse_node(c);
  c.skip_ws();
  if (!c.eof()) throw ParseError("trailing content", c.pos);
  return root;
}

std::string serialize(const ConstituencyTree& tree) {
  std::string out;
  serialize_into(tree, out);
  return out;
}

bool is_punct_label(const std::string& label) {
  if (label == "-LRB-" || label == "-RRB-") return true;
  if (label.empty()) return false;
  for (char32_t cp : decode_utf8(label)) {
    if (!is_punct_cp(cp)) return false;
  }
  return true;
}

std::string strip_label(const std::string& label) {
  if (is_punct_label(label)) return label;
  auto cut = label.find_first_of("-=");
  if (cut == std::string::npos || cut == 0) return label;
  return label.substr(0, cut);
}

std::vector<std::string> first_level_labels(const ConstituencyTree& tree, bool skip_punct) {
  std::vector<std::string> labels;
  for (const auto& child : tree.children) {
    if (skip_punct && is_punct_label(child.label)) continue;
    labels.push_back(child.label);
  }
  return labels;
}

bool matches_pattern(const std::vector<std::string>& labels,
                     const std::vector<std::string>& pattern) {
  if (pattern.empty()) return true;
  if (labels.size() < pattern.size()) return false;
  for (std::size_t i = 0; i + pattern.size() <= labels.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (labels[i + j] != pattern[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::vector<TreeFileEntry> read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file: " + path);
  std::vector<TreeFileEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("tree file line " + std::to_string(line_no) +
                               ": expected <id>\\t<tree>");
    }
    TreeFileEntry entry;
    entry.id = std::string(trim(line.substr(0, tab)));
    try {
      entry.tree = parse_bracketed(line.substr(tab + 1));
    } catch (const ParseError& e) {
      throw std::runtime_error("tree file line " + std::to_string(line_no) + ": " + e.what());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace splitkit
