#include "splitkit/jsonl.hpp"

#include <json.hpp>

#include <stdexcept>

namespace splitkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json sentence_to_json(const Sentence& s) {
  ordered_json j;
  j["text"] = s.text;
  j["tokens"] = s.tokens;
  if (s.lemmas) j["lemmas"] = *s.lemmas;
  if (s.upos) j["upos"] = *s.upos;
  return j;
}

Sentence sentence_from_json(const ordered_json& j) {
  Sentence s;
  s.text = j.at("text").get<std::string>();
  s.tokens = j.at("tokens").get<std::vector<std::string>>();
  if (j.contains("lemmas")) s.lemmas = j.at("lemmas").get<std::vector<std::string>>();
  if (j.contains("upos")) s.upos = j.at("upos").get<std::vector<std::string>>();
  if (!s.annotations_consistent()) {
    throw std::runtime_error("lemmas/upos length does not match tokens");
  }
  return s;
}

ordered_json alignment_to_json(const EditAlignment& a) {
  ordered_json j;
  j["x_padded"] = a.x_padded;
  j["y_padded"] = a.y_padded;
  j["split_x"] = a.split_x;
  j["split_y"] = a.split_y;
  j["delta"] = a.delta;
  return j;
}

EditAlignment alignment_from_json(const ordered_json& j) {
  EditAlignment a;
  a.x_padded = j.at("x_padded").get<std::vector<std::string>>();
  a.y_padded = j.at("y_padded").get<std::vector<std::string>>();
  a.split_x = j.at("split_x").get<std::size_t>();
  a.split_y = j.at("split_y").get<std::size_t>();
  a.delta = j.at("delta").get<std::vector<std::uint8_t>>();
  if (a.delta.size() != a.x_padded.size() || a.delta.size() != a.y_padded.size()) {
    throw std::runtime_error("delta length does not match padded sequences");
  }
  return a;
}

}  // namespace

std::string to_json_line(const PairRecord& rec) {
  ordered_json j;
  j["id"] = rec.id;
  j["long"] = sentence_to_json(rec.longer);
  j["split"] = ordered_json::array({sentence_to_json(rec.split[0]), sentence_to_json(rec.split[1])});
  j["pivot_language"] = rec.pivot_language;
  j["source_corpus"] = rec.source_corpus;
  j["scores"] = ordered_json(std::map<std::string, double>(rec.scores.begin(), rec.scores.end()));
  if (rec.category) j["category"] = to_string(*rec.category);
  if (rec.delta) j["delta"] = alignment_to_json(*rec.delta);
  j["status"] = to_string(rec.status);
  if (rec.status == PairStatus::Rejected) j["reject_reason"] = rec.reject_reason;
  return j.dump();
}

PairRecord pair_from_json_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  PairRecord rec;
  rec.id = j.at("id").get<std::string>();
  if (!j.contains("long")) throw std::runtime_error("missing field: long");
  if (!j.contains("split")) throw std::runtime_error("missing field: split");
  rec.longer = sentence_from_json(j.at("long"));
  const auto& split = j.at("split");
  if (!split.is_array() || split.size() != 2) {
    throw std::runtime_error("split must contain exactly two sentences");
  }
  rec.split[0] = sentence_from_json(split[0]);
  rec.split[1] = sentence_from_json(split[1]);
  rec.pivot_language = j.value("pivot_language", std::string{});
  rec.source_corpus = j.value("source_corpus", std::string{});
  if (j.contains("scores")) {
    for (const auto& [k, v] : j.at("scores").items()) {
      rec.scores[k] = v.get<double>();
    }
  }
  if (j.contains("category")) {
    auto cat = split_category_from_string(j.at("category").get<std::string>());
    if (!cat) throw std::runtime_error("unknown category: " + j.at("category").get<std::string>());
    rec.category = *cat;
  }
  if (j.contains("delta")) rec.delta = alignment_from_json(j.at("delta"));
  if (j.contains("status")) {
    auto st = pair_status_from_string(j.at("status").get<std::string>());
    if (!st) throw std::runtime_error("unknown status: " + j.at("status").get<std::string>());
    rec.status = *st;
  }
  rec.reject_reason = j.value("reject_reason", std::string{});
  if (rec.status == PairStatus::Rejected && rec.reject_reason.empty()) {
    throw std::runtime_error("rejected record without a reason");
  }
  return rec;
}

PairReader::PairReader(const std::string& path)
    : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()) {
  if (!*owned_) throw std::runtime_error("cannot open pair file: " + path);
}

PairReader::PairReader(std::istream& in) : in_(&in) {}

std::optional<PairRecord> PairReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (line.empty()) continue;
    try {
      return pair_from_json_line(line);
    } catch (const std::exception& e) {
      errors_.push_back({line_no_, e.what()});
    }
  }
  return std::nullopt;
}

PairWriter::PairWriter(const std::string& path)
    : owned_(std::make_unique<std::ofstream>(path)), out_(owned_.get()) {
  if (!*owned_) throw std::runtime_error("cannot open output file: " + path);
}

PairWriter::PairWriter(std::ostream& out) : out_(&out) {}

void PairWriter::write(const PairRecord& rec) {
  *out_ << to_json_line(rec) << '\n';
  if (!*out_) throw std::runtime_error("write failure on pair file");
  ++count_;
}

std::vector<PairRecord> read_pairs(const std::string& path, std::vector<LineError>* errors) {
  PairReader reader(path);
  std::vector<PairRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  if (errors) *errors = reader.errors();
  return out;
}

std::size_t write_pairs(const std::vector<PairRecord>& records, const std::string& path) {
  PairWriter writer(path);
  for (const auto& rec : records) writer.write(rec);
  return writer.count();
}

}  // namespace splitkit
