#include "splitkit/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "splitkit/text.hpp"

namespace splitkit {

void ParaphraseTable::insert(const std::string& phrase, const std::string& paraphrase) {
  if (phrase.empty() || paraphrase.empty() || phrase == paraphrase) return;
  entries_[phrase].insert(paraphrase);
  entries_[paraphrase].insert(phrase);
}

const std::set<std::string>* ParaphraseTable::find(const std::string& phrase) const {
  auto it = entries_.find(phrase);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

std::string normalize_phrase(std::string_view raw) {
  return join(split_whitespace(lowercase(raw)));
}

std::vector<std::string_view> split_pipes(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find("|||", start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 3;
  }
  return fields;
}

}  // namespace

ParaphraseTable ParaphraseTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open paraphrase table: " + path);
  ParaphraseTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_pipes(line);
    if (fields.size() < 3) continue;
    table.insert(normalize_phrase(fields[1]), normalize_phrase(fields[2]));
  }
  return table;
}

namespace {

using Counts = std::map<std::string, std::size_t>;

std::string ngram_key(const TokenList& tokens, std::size_t start, std::size_t n) {
  std::string key = tokens[start];
  for (std::size_t k = 1; k < n; ++k) {
    key.push_back(' ');
    key.append(tokens[start + k]);
  }
  return key;
}

Counts ngram_counts(const TokenList& tokens, std::size_t n) {
  Counts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[ngram_key(tokens, i, n)];
  }
  return counts;
}

// Occurrences of a space-joined phrase as a contiguous token run; used for
// paraphrases whose length differs from the n-gram order under scoring.
std::size_t phrase_occurrences(const TokenList& tokens, const std::string& phrase) {
  const auto needle = split_whitespace(phrase);
  if (needle.empty() || tokens.size() < needle.size()) return 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i + needle.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k) {
      if (tokens[i + k] != needle[k]) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  }
  return hits;
}

std::size_t count_of(const Counts& counts, const std::string& key) {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double f1(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

struct NgramComponents {
  double add = 0.0;
  double keep = 0.0;
  double del = 0.0;
};

NgramComponents sari_components(const TokenList& source, const TokenList& output,
                                const std::vector<TokenList>& references, std::size_t n,
                                const ParaphraseTable* table) {
  const Counts src = ngram_counts(source, n);
  const Counts out = ngram_counts(output, n);
  std::vector<Counts> refs;
  refs.reserve(references.size());
  for (const auto& ref : references) refs.push_back(ngram_counts(ref, n));

  // Max reference count per n-gram, optionally boosted by paraphrases.
  auto ref_count = [&](const std::string& gram) {
    std::size_t best = 0;
    for (const auto& rc : refs) best = std::max(best, count_of(rc, gram));
    return best;
  };
  auto ref_count_para = [&](const std::string& gram) {
    std::size_t best = ref_count(gram);
    if (table != nullptr) {
      if (const auto* paras = table->find(gram)) {
        for (const auto& p : paras) {
          for (const auto& ref : references) {
            best = std::max(best, phrase_occurrences(ref, p));
          }
        }
      }
    }
    return best;
  };

  std::set<std::string> grams;
  for (const auto& [g, c] : src) grams.insert(g);
  for (const auto& [g, c] : out) grams.insert(g);
  for (const auto& rc : refs) {
    for (const auto& [g, c] : rc) grams.insert(g);
  }

  double keep_total = 0, keep_good = 0, keep_all = 0;
  double add_total = 0, add_good = 0, add_all = 0;
  double del_total = 0, del_good = 0;
  for (const auto& gram : grams) {
    const double s = static_cast<double>(count_of(src, gram));
    const double o = static_cast<double>(count_of(out, gram));
    const double r = static_cast<double>(ref_count(gram));
    const double rp = static_cast<double>(ref_count_para(gram));

    const double kept = std::min(s, o);
    keep_total += kept;
    keep_good += std::min(kept, rp);
    keep_all += std::min(s, r);

    const double added = std::max(0.0, o - s);
    add_total += added;
    add_good += std::min(added, std::max(0.0, rp - s));
    add_all += std::max(0.0, r - s);

    const double deleted = std::max(0.0, s - o);
    del_total += deleted;
    del_good += std::min(deleted, std::max(0.0, s - r));
  }

  NgramComponents comp;
  comp.keep = f1(safe_div(keep_good, keep_total), std::min(1.0, safe_div(keep_good, keep_all)));
  comp.add = f1(safe_div(add_good, add_total), std::min(1.0, safe_div(add_good, add_all)));
  comp.del = safe_div(del_good, del_total);
  return comp;
}

}  // namespace

SariScore sari_sentence(const TokenList& source, const TokenList& output,
                        const std::vector<TokenList>& references, const ParaphraseTable* table,
                        int max_n) {
  if (references.empty()) throw std::invalid_argument("sari: no references");
  if (output.empty()) throw std::invalid_argument("sari: empty output");
  if (max_n < 1) throw std::invalid_argument("sari: max_n must be positive");

  SariScore score;
  for (int n = 1; n <= max_n; ++n) {
    const auto comp = sari_components(source, output, references, static_cast<std::size_t>(n), table);
    score.add += comp.add;
    score.keep += comp.keep;
    score.del += comp.del;
  }
  const double scale = 100.0 / max_n;
  score.add *= scale;
  score.keep *= scale;
  score.del *= scale;
  score.sari = (score.add + score.keep + score.del) / 3.0;
  return score;
}

SariScore sari_corpus(const std::vector<TokenList>& sources, const std::vector<TokenList>& outputs,
                      const std::vector<std::vector<TokenList>>& references,
                      const ParaphraseTable* table, int max_n) {
  if (sources.size() != outputs.size() || sources.size() != references.size()) {
    throw std::invalid_argument("sari_corpus: corpus sides differ in length");
  }
  if (sources.empty()) throw std::invalid_argument("sari_corpus: empty corpus");
  SariScore total;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto s = sari_sentence(sources[i], outputs[i], references[i], table, max_n);
    total.add += s.add;
    total.keep += s.keep;
    total.del += s.del;
  }
  const double n = static_cast<double>(sources.size());
  total.add /= n;
  total.keep /= n;
  total.del /= n;
  total.sari = (total.add + total.keep + total.del) / 3.0;
  return total;
}

double bleu_corpus(const std::vector<TokenList>& outputs,
                   const std::vector<std::vector<TokenList>>& references, int max_n) {
  if (outputs.empty()) throw std::invalid_argument("bleu: empty corpus");
  if (outputs.size() != references.size()) {
    throw std::invalid_argument("bleu: outputs and references differ in length");
  }
  std::vector<double> matches(static_cast<std::size_t>(max_n), 0.0);
  std::vector<double> totals(static_cast<std::size_t>(max_n), 0.0);
  double out_len = 0.0;
  double ref_len = 0.0;

  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const auto& out = outputs[i];
    const auto& refs = references[i];
    if (refs.empty()) throw std::invalid_argument("bleu: segment without references");
    out_len += static_cast<double>(out.size());
    // Closest reference length; ties go to the shorter reference.
    std::size_t best_ref = refs[0].size();
    for (const auto& ref : refs) {
      const auto d = [&](std::size_t len) {
        return len > out.size() ? len - out.size() : out.size() - len;
      };
      if (d(ref.size()) < d(best_ref) || (d(ref.size()) == d(best_ref) && ref.size() < best_ref)) {
        best_ref = ref.size();
      }
    }
    ref_len += static_cast<double>(best_ref);

    for (int n = 1; n <= max_n; ++n) {
      const auto nn = static_cast<std::size_t>(n);
      const Counts out_counts = ngram_counts(out, nn);
      Counts clip;
      for (const auto& ref : refs) {
        for (const auto& [g, c] : ngram_counts(ref, nn)) {
          clip[g] = std::max(clip[g], c);
        }
      }
      for (const auto& [g, c] : out_counts) {
        matches[nn - 1] += static_cast<double>(std::min(c, count_of(clip, g)));
      }
      if (out.size() >= nn) totals[nn - 1] += static_cast<double>(out.size() - nn + 1);
    }
  }

  double log_prec = 0.0;
  for (int n = 0; n < max_n; ++n) {
    const double p = safe_div(matches[static_cast<std::size_t>(n)],
                              totals[static_cast<std::size_t>(n)]);
    if (p == 0.0) return 0.0;
    log_prec += std::log(p);
  }
  log_prec /= max_n;
  const double bp = (out_len > ref_len || out_len == 0.0)
                        ? 1.0
                        : std::exp(1.0 - ref_len / out_len);
  return 100.0 * bp * std::exp(log_prec);
}

double self_bleu(const std::vector<TokenList>& outputs, const std::vector<TokenList>& sources,
                 int max_n) {
  std::vector<std::vector<TokenList>> refs;
  refs.reserve(sources.size());
  for (const auto& src : sources) refs.push_back({src});
  return bleu_corpus(outputs, refs, max_n);
}

std::size_t count_syllables(const std::string& word) {
  std::string letters;
  for (char32_t cp : decode_utf8(lowercase(word))) {
    if (is_alpha_cp(cp) && cp < 0x80) letters.push_back(static_cast<char>(cp));
  }
  if (letters.empty()) return 1;
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : letters) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (groups > 1 && letters.back() == 'e') --groups;
  return std::max<std::size_t>(groups, 1);
}

namespace {

bool is_word_token(const std::string& tok) {
  for (char32_t cp : decode_utf8(tok)) {
    if (is_alpha_cp(cp) || (cp < 0x80 && std::isdigit(static_cast<int>(cp)))) return true;
  }
  return false;
}

bool ends_sentence(const std::string& tok) {
  return tok == kSepToken || tok == "." || tok == "!" || tok == "?";
}

}  // namespace

std::vector<TokenList> split_sentences(const TokenList& tokens) {
  std::vector<TokenList> sentences;
  TokenList cur;
  for (const auto& tok : tokens) {
    if (tok != kSepToken) cur.push_back(tok);
    if (ends_sentence(tok)) {
      if (std::any_of(cur.begin(), cur.end(), is_word_token)) sentences.push_back(cur);
      cur.clear();
    }
  }
  if (std::any_of(cur.begin(), cur.end(), is_word_token)) sentences.push_back(cur);
  return sentences;
}

double fkgl(const std::vector<TokenList>& outputs) {
  std::size_t words = 0, sentences = 0, syllables = 0;
  for (const auto& output : outputs) {
    for (const auto& sentence : split_sentences(output)) {
      ++sentences;
      for (const auto& tok : sentence) {
        if (!is_word_token(tok)) continue;
        ++words;
        syllables += count_syllables(tok);
      }
    }
  }
  if (words == 0) throw std::invalid_argument("fkgl: no words");
  if (sentences == 0) sentences = 1;
  return 0.39 * (static_cast<double>(words) / static_cast<double>(sentences)) +
         11.8 * (static_cast<double>(syllables) / static_cast<double>(words)) - 15.59;
}

double pct_new(const TokenList& source, const TokenList& output) {
  TokenList out_norm = normalize_for_metrics(output);
  if (out_norm.empty()) throw std::invalid_argument("pct_new: empty output");
  std::set<std::string> src_types;
  for (const auto& tok : normalize_for_metrics(source)) src_types.insert(tok);
  std::size_t fresh = 0;
  for (const auto& tok : out_norm) fresh += src_types.count(tok) == 0 ? 1 : 0;
  return 100.0 * static_cast<double>(fresh) / static_cast<double>(out_norm.size());
}

TokenList normalize_for_metrics(const TokenList& tokens) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (tok == kSepToken) continue;
    out.push_back(lowercase(tok));
  }
  return out;
}

LengthStats length_stats(const std::vector<PairRecord>& corpus) {
  LengthStats stats;
  std::set<std::string> unique_longs;
  double long_tokens = 0, split_tokens = 0, split_sentences = 0, pct_sum = 0;
  double output_tokens = 0;
  for (const auto& rec : corpus) {
    ++stats.n_pairs;
    unique_longs.insert(rec.longer.text.empty() ? join(rec.longer.tokens) : rec.longer.text);
    long_tokens += static_cast<double>(rec.longer.tokens.size());
    TokenList combined;
    for (const auto& side : rec.split) {
      split_tokens += static_cast<double>(side.tokens.size());
      split_sentences += 1;
      combined.insert(combined.end(), side.tokens.begin(), side.tokens.end());
    }
    output_tokens += static_cast<double>(combined.size());
    pct_sum += pct_new(rec.longer.tokens, combined);
  }
  stats.n_unique = unique_longs.size();
  if (stats.n_pairs == 0) return stats;
  const double n = static_cast<double>(stats.n_pairs);
  stats.long_len = long_tokens / n;
  stats.split_len = split_tokens / split_sentences;
  stats.slen = stats.split_len;
  stats.olen = output_tokens / n;
  stats.pct_new = pct_sum / n;
  return stats;
}

MetricReport evaluate_system(const std::vector<TokenList>& sources,
                             const std::vector<TokenList>& outputs,
                             const std::vector<std::vector<TokenList>>& references,
                             const EvalOptions& opts) {
  if (sources.size() != outputs.size() || sources.size() != references.size()) {
    throw std::invalid_argument("evaluate_system: corpus sides differ in length");
  }
  if (sources.empty()) throw std::invalid_argument("evaluate_system: empty corpus");

  std::vector<TokenList> norm_src, norm_out;
  std::vector<std::vector<TokenList>> norm_refs;
  norm_src.reserve(sources.size());
  norm_out.reserve(outputs.size());
  norm_refs.reserve(references.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    norm_src.push_back(normalize_for_metrics(sources[i]));
    norm_out.push_back(normalize_for_metrics(outputs[i]));
    std::vector<TokenList> refs;
    refs.reserve(references[i].size());
    for (const auto& ref : references[i]) refs.push_back(normalize_for_metrics(ref));
    norm_refs.push_back(std::move(refs));
  }

  MetricReport report;
  const auto sari = sari_corpus(norm_src, norm_out, norm_refs, opts.table, opts.max_n);
  report.sari = sari.sari;
  report.sari_add = sari.add;
  report.sari_keep = sari.keep;
  report.sari_del = sari.del;
  report.bleu = bleu_corpus(norm_out, norm_refs, opts.max_n);
  report.self_bleu = self_bleu(norm_out, norm_src, opts.max_n);
  report.fkgl = fkgl(outputs);
  report.bert_score = opts.bert_score;

  double sentence_tokens = 0, sentence_count = 0, output_tokens = 0, pct_sum = 0;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (const auto& sentence : split_sentences(outputs[i])) {
      sentence_count += 1;
      sentence_tokens += static_cast<double>(sentence.size());
    }
    output_tokens += static_cast<double>(norm_out[i].size());
    pct_sum += pct_new(sources[i], outputs[i]);
  }
  const double n = static_cast<double>(outputs.size());
  report.slen = sentence_count == 0 ? 0.0 : sentence_tokens / sentence_count;
  report.olen = output_tokens / n;
  report.pct_new = pct_sum / n;
  return report;
}

std::string format_report(const std::string& name, const MetricReport& report) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << name << '\t' << report.sari << '\t' << report.sari_add << '\t' << report.sari_keep << '\t'
     << report.sari_del << '\t';
  if (report.bert_score) {
    os << *report.bert_score;
  } else {
    os << "-";
  }
  os << '\t' << report.fkgl << '\t' << report.bleu << '\t' << report.slen << '\t' << report.olen
     << '\t' << report.self_bleu << '\t' << report.pct_new;
  return os.str();
}

}  // namespace splitkit
