#include "splitkit/conllu.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "splitkit/text.hpp"

namespace splitkit {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

[[noreturn]] void fail(const std::string& name, std::size_t line_no, const std::string& msg) {
  throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::map<std::string, ConlluSentence> read_conllu_stream(std::istream& in,
                                                         const std::string& name) {
  std::map<std::string, ConlluSentence> out;
  ConlluSentence cur;
  bool in_sentence = false;
  std::size_t line_no = 0;

  auto flush = [&](std::size_t at_line) {
    if (!in_sentence) return;
    if (cur.sent_id.empty()) fail(name, at_line, "sentence without # sent_id comment");
    if (out.count(cur.sent_id)) fail(name, at_line, "duplicate sent_id: " + cur.sent_id);
    cur.dep.n = cur.sentence.tokens.size();
    if (cur.sentence.text.empty()) cur.sentence.text = join(cur.sentence.tokens);
    out.emplace(cur.sent_id, std::move(cur));
    cur = ConlluSentence{};
    in_sentence = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush(line_no);
      continue;
    }
    if (line[0] == '#') {
      auto body = trim(std::string_view(line).substr(1));
      if (starts_with(body, "sent_id")) {
        auto eq = body.find('=');
        if (eq != std::string_view::npos) {
          cur.sent_id = std::string(trim(body.substr(eq + 1)));
          in_sentence = true;
        }
      } else if (starts_with(body, "text")) {
        auto eq = body.find('=');
        if (eq != std::string_view::npos) cur.sentence.text = std::string(trim(body.substr(eq + 1)));
      }
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != 10) {
      fail(name, line_no, "expected 10 columns, got " + std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    // Multiword token ranges and empty (decimal) nodes carry no tree edges.
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) continue;
    in_sentence = true;
    if (!cur.sentence.lemmas) cur.sentence.lemmas.emplace();
    if (!cur.sentence.upos) cur.sentence.upos.emplace();
    cur.sentence.tokens.push_back(cols[1]);
    cur.sentence.lemmas->push_back(cols[2] == "_" ? lowercase(cols[1]) : cols[2]);
    cur.sentence.upos->push_back(cols[3]);
    int head = 0;
    if (cols[6] != "_") {
      try {
        head = std::stoi(cols[6]);
      } catch (const std::exception&) {
        fail(name, line_no, "bad HEAD column: " + cols[6]);
      }
      if (head < 0) fail(name, line_no, "negative HEAD index");
    }
    cur.dep.heads.push_back(head);
    cur.dep.deprels.push_back(cols[7]);
  }
  flush(line_no + 1);

  for (auto& [id, sent] : out) {
    for (int head : sent.dep.heads) {
      if (head > static_cast<int>(sent.dep.n)) {
        throw std::runtime_error(name + ": sentence " + id + ": HEAD index " +
                                 std::to_string(head) + " out of range");
      }
    }
  }
  return out;
}

std::map<std::string, ConlluSentence> read_conllu(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CoNLL-U file: " + path);
  return read_conllu_stream(in, path);
}

void apply_annotations(Sentence& sentence, const ConlluSentence& ann) {
  if (sentence.tokens.size() != ann.sentence.tokens.size()) {
    throw std::runtime_error("annotation token count mismatch for sentence: " +
                             ann.sent_id);
  }
  sentence.lemmas = ann.sentence.lemmas;
  sentence.upos = ann.sentence.upos;
}

}  // namespace splitkit
