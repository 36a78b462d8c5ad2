#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitkit/types.hpp"

namespace splitkit {

using TokenList = std::vector<std::string>;

// Phrase-to-paraphrases table. Lookup is symmetric after load: inserting
// a -> b also records b -> a.
class ParaphraseTable {
 public:
  void insert(const std::string& phrase, const std::string& paraphrase);
  const std::set<std::string>* find(const std::string& phrase) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Pipe-delimited paraphrase database dump: "lhs ||| phrase |||
  // paraphrase ||| ...". Only the two phrase fields are consumed.
  static ParaphraseTable load(const std::string& path);

 private:
  std::map<std::string, std::set<std::string>> entries_;
};

struct SariScore {
  double sari = 0.0;
  double add = 0.0;
  double keep = 0.0;
  double del = 0.0;
};

// Sentence-level SARI over n = 1..max_n: F1 for add and keep, precision for
// delete, each averaged over n and scaled to [0,100]. An output n-gram
// matches the reference if the n-gram itself or any table paraphrase of it
// occurs there; deletions are judged on exact counts only. Inputs must be
// lowercased, separator-free token lists (see normalize_for_metrics).
SariScore sari_sentence(const TokenList& source, const TokenList& output,
                        const std::vector<TokenList>& references,
                        const ParaphraseTable* table = nullptr, int max_n = 4);

// Macro-average of sentence-level SARI over the corpus.
SariScore sari_corpus(const std::vector<TokenList>& sources, const std::vector<TokenList>& outputs,
                      const std::vector<std::vector<TokenList>>& references,
                      const ParaphraseTable* table = nullptr, int max_n = 4);

// Corpus-level BLEU with brevity penalty, uniform weights over n = 1..max_n,
// scaled to [0,100]. No smoothing: a zero precision at any order gives 0.
double bleu_corpus(const std::vector<TokenList>& outputs,
                   const std::vector<std::vector<TokenList>>& references, int max_n = 4);

// BLEU of the outputs against their own sources.
double self_bleu(const std::vector<TokenList>& outputs, const std::vector<TokenList>& sources,
                 int max_n = 4);

// Deterministic syllable heuristic: maximal vowel groups (aeiouy) over the
// word's alphabetic characters, minus one for a trailing silent e when more
// than one group remains, floored at 1.
std::size_t count_syllables(const std::string& word);

// 0.39 * words/sentences + 11.8 * syllables/words - 15.59, over the whole
// corpus. Sentences split at [SEP] and sentence-final punctuation; words
// are tokens containing an alphanumeric character. Throws on zero words.
double fkgl(const std::vector<TokenList>& outputs);

// Percentage of output token occurrences whose type is absent from the
// source. Throws on empty output.
double pct_new(const TokenList& source, const TokenList& output);

struct LengthStats {
  double slen = 0.0;       // mean tokens per output sentence
  double olen = 0.0;       // mean tokens per full output
  double long_len = 0.0;   // mean tokens of the long side
  double split_len = 0.0;  // mean tokens per individual split sentence
  double pct_new = 0.0;    // mean over pairs
  std::size_t n_pairs = 0;
  std::size_t n_unique = 0;  // distinct long sentences
};

// Table-style corpus statistics over pair records.
LengthStats length_stats(const std::vector<PairRecord>& corpus);

struct MetricReport {
  double sari = 0.0;
  double sari_add = 0.0;
  double sari_keep = 0.0;
  double sari_del = 0.0;
  std::optional<double> bert_score;  // externally supplied
  double fkgl = 0.0;
  double bleu = 0.0;
  double slen = 0.0;
  double olen = 0.0;
  double self_bleu = 0.0;
  double pct_new = 0.0;
};

struct EvalOptions {
  int max_n = 4;
  const ParaphraseTable* table = nullptr;
  std::optional<double> bert_score;
};

// Full metric suite for one system. Raw token lists may still contain the
// separator; each metric applies its own separator handling.
MetricReport evaluate_system(const std::vector<TokenList>& sources,
                             const std::vector<TokenList>& outputs,
                             const std::vector<std::vector<TokenList>>& references,
                             const EvalOptions& opts = {});

// Lowercases tokens and drops separator tokens.
TokenList normalize_for_metrics(const TokenList& tokens);

// Splits a flat token list into sentences at [SEP] and after .!? tokens.
std::vector<TokenList> split_sentences(const TokenList& tokens);

std::string format_report(const std::string& name, const MetricReport& report);

}  // namespace splitkit
