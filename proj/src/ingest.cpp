#include "splitkit/ingest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "splitkit/text.hpp"

namespace splitkit {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::size_t> parse_indices(std::string_view part, const std::string& line) {
  std::vector<std::size_t> out;
  std::istringstream ss{std::string(part)};
  long value;
  while (ss >> value) {
    if (value < 0) throw std::runtime_error("negative index in alignment line: " + line);
    out.push_back(static_cast<std::size_t>(value));
  }
  if (!ss.eof()) throw std::runtime_error("bad alignment line: " + line);
  if (out.empty()) throw std::runtime_error("empty index list in alignment line: " + line);
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) {
      throw std::runtime_error("indices not strictly increasing: " + line);
    }
  }
  return out;
}

}  // namespace

AlignmentRecord parse_alignment_line(const std::string& line) {
  const auto sep = line.find(" - ");
  if (sep == std::string::npos) {
    throw std::runtime_error("alignment line missing \" - \" separator: " + line);
  }
  AlignmentRecord rec;
  rec.src_indices = parse_indices(std::string_view(line).substr(0, sep), line);
  rec.tgt_indices = parse_indices(std::string_view(line).substr(sep + 3), line);
  return rec;
}

std::vector<ResolvedAlignment> load_bitext(const std::string& src_path,
                                           const std::string& tgt_path,
                                           const std::string& align_path,
                                           std::vector<IngestError>* errors) {
  const auto src_lines = read_lines(src_path);
  const auto tgt_lines = read_lines(tgt_path);
  const auto align_lines = read_lines(align_path);

  std::vector<ResolvedAlignment> out;
  std::string doc_id;
  for (std::size_t i = 0; i < align_lines.size(); ++i) {
    const std::string& line = align_lines[i];
    auto trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      if (starts_with(trimmed, "# doc")) {
        doc_id = std::string(trim(trimmed.substr(5)));
      }
      continue;
    }
    ResolvedAlignment resolved;
    try {
      resolved.alignment = parse_alignment_line(std::string(trimmed));
    } catch (const std::exception& e) {
      if (errors) errors->push_back({i + 1, e.what()});
      continue;
    }
    resolved.alignment.doc_id = doc_id;
    bool in_range = true;
    for (std::size_t idx : resolved.alignment.src_indices) {
      if (idx >= src_lines.size()) {
        if (errors) {
          errors->push_back({i + 1, "src index " + std::to_string(idx) + " out of range (" +
                                        std::to_string(src_lines.size()) + " lines)"});
        }
        in_range = false;
        break;
      }
      resolved.src_texts.push_back(src_lines[idx]);
    }
    if (!in_range) continue;
    for (std::size_t idx : resolved.alignment.tgt_indices) {
      if (idx >= tgt_lines.size()) {
        if (errors) {
          errors->push_back({i + 1, "tgt index " + std::to_string(idx) + " out of range (" +
                                        std::to_string(tgt_lines.size()) + " lines)"});
        }
        in_range = false;
        break;
      }
      resolved.tgt_texts.push_back(tgt_lines[idx]);
    }
    if (!in_range) continue;
    out.push_back(std::move(resolved));
  }
  return out;
}

std::map<std::string, std::string> load_translations(const std::string& path) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open translation sidecar: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("translation sidecar line " + std::to_string(line_no) +
                               ": expected <segment-id>\\t<text>");
    }
    out[std::string(trim(line.substr(0, tab)))] = std::string(trim(line.substr(tab + 1)));
  }
  return out;
}

namespace {

Sentence make_sentence(const std::string& text) {
  Sentence s;
  s.text = text;
  s.tokens = split_whitespace(text);
  return s;
}

}  // namespace

IngestResult select_one_to_two(const std::vector<ResolvedAlignment>& records,
                               const std::map<std::string, std::string>& translations,
                               const IngestOptions& opts) {
  IngestResult result;
  std::size_t seq = 0;
  for (const auto& rec : records) {
    ++seq;
    const std::size_t ns = rec.alignment.src_indices.size();
    const std::size_t nt = rec.alignment.tgt_indices.size();
    const bool one_two = ns == 1 && nt == 2;
    const bool two_one = ns == 2 && nt == 1;
    if (!one_two && !two_one) {
      ++result.drop_counts["not_1_2"];
      continue;
    }

    // English text for a segment: file text on the English side, sidecar
    // translation keyed by "<side>:<line>" on the foreign side.
    const bool src_is_english = opts.english_side == EnglishSide::Src;
    auto english_text = [&](bool from_src, std::size_t position) -> std::optional<std::string> {
      const auto& texts = from_src ? rec.src_texts : rec.tgt_texts;
      const auto& indices = from_src ? rec.alignment.src_indices : rec.alignment.tgt_indices;
      const bool needs_translation = from_src != src_is_english;
      if (!needs_translation) return texts[position];
      const std::string key =
          (from_src ? "src:" : "tgt:") + std::to_string(indices[position]);
      auto it = translations.find(key);
      if (it == translations.end()) return std::nullopt;
      return it->second;
    };

    const bool long_from_src = ns == 1;
    auto longer = english_text(long_from_src, 0);
    auto first = english_text(!long_from_src, 0);
    auto second = english_text(!long_from_src, 1);
    if (!longer || !first || !second) {
      result.errors.push_back({seq, "missing translation for a referenced segment"});
      ++result.drop_counts["missing_translation"];
      continue;
    }

    PairRecord pair;
    pair.id = opts.id_prefix + "-" + std::to_string(result.pairs.size() + 1);
    if (!rec.alignment.doc_id.empty()) {
      pair.id = rec.alignment.doc_id + "-" + std::to_string(result.pairs.size() + 1);
    }
    pair.longer = make_sentence(*longer);
    pair.split[0] = make_sentence(*first);
    pair.split[1] = make_sentence(*second);
    pair.pivot_language = opts.pivot_language;
    pair.source_corpus = opts.source_corpus;
    pair.status = PairStatus::Raw;
    if (pair.longer.tokens.empty() || pair.split[0].tokens.empty() ||
        pair.split[1].tokens.empty()) {
      ++result.drop_counts["empty_side"];
      continue;
    }
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

}  // namespace splitkit
