#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "splitkit/edit_align.hpp"
#include "splitkit/ingest.hpp"
#include "splitkit/jsonl.hpp"
#include "splitkit/loss.hpp"
#include "splitkit/metrics.hpp"
#include "splitkit/pipeline.hpp"
#include "splitkit/text.hpp"

namespace {

using namespace splitkit;

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

LogLevel g_log_level = LogLevel::Info;

void init_log_level() {
  const char* env = std::getenv("SPLITKIT_LOG");
  if (env == nullptr) return;
  const std::string value = lowercase(env);
  if (value == "debug") g_log_level = LogLevel::Debug;
  else if (value == "info") g_log_level = LogLevel::Info;
  else if (value == "warn") g_log_level = LogLevel::Warn;
  else if (value == "error") g_log_level = LogLevel::Error;
}

void log_at(LogLevel level, const std::string& msg) {
  static const char* names[] = {"debug", "info", "warn", "error"};
  if (level < g_log_level) return;
  std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

void log_info(const std::string& msg) { log_at(LogLevel::Info, msg); }
void log_warn(const std::string& msg) { log_at(LogLevel::Warn, msg); }

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInternal = 2;

void emit_report(const std::string& report_path, const std::string& text) {
  std::cout << text << '\n';
  if (report_path.empty()) return;
  std::ofstream out(report_path);
  if (!out) throw std::runtime_error("cannot open report file: " + report_path);
  out << text << '\n';
}

std::vector<TokenList> read_token_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<TokenList> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(split_whitespace(line));
  return out;
}

struct CommonOpts {
  std::string input;
  std::string output;
  std::string report;
  std::size_t jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_output = true) {
  cmd->add_option("--input", opts.input, "input pair file (JSON Lines)")->required();
  if (needs_output) {
    cmd->add_option("--output", opts.output, "output pair file")->required();
  }
  cmd->add_option("--report", opts.report, "also write the run summary to this file");
  cmd->add_option("--jobs", opts.jobs, "worker threads (deterministic output)")
      ->check(CLI::PositiveNumber);
}

std::vector<PairRecord> load_records(const std::string& path, StageSummary& summary) {
  std::vector<LineError> line_errors;
  auto records = read_pairs(path, &line_errors);
  for (const auto& err : line_errors) {
    summary.record_errors.push_back(path + ":" + std::to_string(err.line_no) + ": " + err.message);
    log_warn(path + ":" + std::to_string(err.line_no) + ": " + err.message);
  }
  summary.counters["input_line_errors"] = line_errors.size();
  return records;
}

int cmd_ingest(const std::string& src, const std::string& tgt, const std::string& align,
               const std::string& translations_path, const std::string& english_side,
               const IngestOptions& base_opts, const std::string& output,
               const std::string& report) {
  IngestOptions opts = base_opts;
  opts.english_side = english_side == "tgt" ? EnglishSide::Tgt : EnglishSide::Src;
  std::vector<IngestError> errors;
  auto resolved = load_bitext(src, tgt, align, &errors);
  std::map<std::string, std::string> translations;
  if (!translations_path.empty()) translations = load_translations(translations_path);
  auto result = select_one_to_two(resolved, translations, opts);

  const std::size_t written = write_pairs(result.pairs, output);
  StageSummary summary;
  summary.records_in = resolved.size();
  summary.records_out = written;
  for (const auto& [k, v] : result.drop_counts) summary.counters["dropped:" + k] = v;
  for (const auto& err : errors) {
    summary.record_errors.push_back("alignment line " + std::to_string(err.line_no) + ": " +
                                    err.message);
  }
  for (const auto& err : result.errors) {
    summary.record_errors.push_back("alignment record " + std::to_string(err.line_no) + ": " +
                                    err.message);
  }
  emit_report(report, format_summary("ingest", summary));
  return kExitOk;
}

int cmd_filter(const CommonOpts& common, const std::string& conllu_path,
               const FilterConfig& cfg) {
  StageSummary summary;
  auto records = load_records(common.input, summary);
  std::map<std::string, ConlluSentence> annotations;
  if (!conllu_path.empty()) annotations = read_conllu(conllu_path);
  records = filter_records(std::move(records), annotations, cfg, common.jobs, summary);
  write_pairs(records, common.output);
  emit_report(common.report, format_summary("filter", summary));
  return kExitOk;
}

int cmd_categorize(const CommonOpts& common, const std::string& trees_path,
                   const CategorizeConfig& cfg) {
  StageSummary summary;
  auto records = load_records(common.input, summary);
  std::map<std::string, ConstituencyTree> trees;
  for (auto& entry : read_tree_file(trees_path)) {
    trees.emplace(entry.id, std::move(entry.tree));
  }
  records = categorize_records(std::move(records), trees, cfg, common.jobs, summary);
  write_pairs(records, common.output);
  emit_report(common.report, format_summary("categorize", summary));
  return kExitOk;
}

int cmd_label(const CommonOpts& common, std::size_t min_copy_run) {
  StageSummary summary;
  auto records = load_records(common.input, summary);
  records = label_records(std::move(records), min_copy_run, common.jobs, summary);
  write_pairs(records, common.output);
  emit_report(common.report, format_summary("label", summary));
  return kExitOk;
}

int cmd_loss_eval(const std::string& input, const std::string& probs_path, double weight,
                  const std::string& report) {
  StageSummary summary;
  auto records = load_records(input, summary);
  auto inputs = read_prob_file(probs_path);

  double seq_total = 0.0, joint_total = 0.0;
  std::size_t scored = 0, joint_scored = 0;
  std::ostringstream lines;
  for (const auto& rec : records) {
    if (!rec.delta) {
      ++summary.counters["skipped:no_delta"];
      continue;
    }
    auto it = inputs.find(rec.id);
    if (it == inputs.end()) {
      ++summary.counters["skipped:no_probs"];
      continue;
    }
    const double seq = seq_loss(*rec.delta, it->second.matrix);
    seq_total += seq;
    ++scored;
    lines << rec.id << "\tseq_loss=" << seq;
    if (it->second.class_probs && rec.category) {
      const double joint = joint_loss(seq, *it->second.class_probs, *rec.category, weight);
      joint_total += joint;
      ++joint_scored;
      lines << "\tjoint_loss=" << joint;
    }
    lines << '\n';
  }
  summary.counters["scored"] = scored;

  std::ostringstream os;
  os << lines.str();
  if (scored > 0) os << "mean_seq_loss\t" << seq_total / static_cast<double>(scored) << '\n';
  if (joint_scored > 0) {
    os << "mean_joint_loss\t" << joint_total / static_cast<double>(joint_scored) << '\n';
  }
  os << format_summary("loss-eval", summary);
  emit_report(report, os.str());
  return kExitOk;
}

int cmd_evaluate(const std::string& source_path, const std::string& output_path,
                 const std::vector<std::string>& ref_paths, const std::string& ppdb_path,
                 int max_n, bool use_paraphrase, std::optional<double> bert_score,
                 const std::string& report) {
  const auto sources = read_token_lines(source_path);
  const auto outputs = read_token_lines(output_path);
  if (sources.size() != outputs.size()) {
    throw std::runtime_error("source and output files differ in line count");
  }
  std::vector<std::vector<TokenList>> references(sources.size());
  if (ref_paths.empty()) throw std::runtime_error("at least one --refs file is required");
  for (const auto& path : ref_paths) {
    const auto refs = read_token_lines(path);
    if (refs.size() != sources.size()) {
      throw std::runtime_error("reference file " + path + " differs in line count");
    }
    for (std::size_t i = 0; i < refs.size(); ++i) references[i].push_back(refs[i]);
  }

  ParaphraseTable table;
  EvalOptions opts;
  opts.max_n = max_n;
  opts.bert_score = bert_score;
  if (!ppdb_path.empty() && use_paraphrase) {
    table = ParaphraseTable::load(ppdb_path);
    opts.table = &table;
    log_info("paraphrase table loaded: " + std::to_string(table.size()) + " phrases");
  }

  const auto result = evaluate_system(sources, outputs, references, opts);
  std::ostringstream os;
  os << "system\tSARI\tadd\tkeep\tdel\tBScore\tFK\tBLEU\tSLen\tOLen\tsBLEU\t%new\n";
  os << format_report(output_path, result);
  emit_report(report, os.str());
  return kExitOk;
}

int cmd_stats(const std::string& input, const std::string& report) {
  StageSummary summary;
  auto records = load_records(input, summary);
  const auto stats = length_stats(records);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << "#pairs\t#unique\t%new\tLong\tSplit\n";
  os << stats.n_pairs << '\t' << stats.n_unique << '\t' << stats.pct_new << '\t' << stats.long_len
     << '\t' << stats.split_len;
  emit_report(report, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();
  CLI::App app{"splitkit: corpus pipeline for sentence splitting with rephrasing"};
  app.require_subcommand(1);
  app.set_config("--config", "", "configuration file (INI format, CLI flags override)");
  app.allow_config_extras(CLI::config_extras_mode::ignore_all);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "assemble pair records from aligned bitext");
  std::string in_src, in_tgt, in_align, in_translations, in_english = "src", in_output,
              in_report;
  IngestOptions ingest_opts;
  ingest->add_option("--src", in_src, "source-side sentences, one per line")->required();
  ingest->add_option("--tgt", in_tgt, "target-side sentences, one per line")->required();
  ingest->add_option("--align", in_align, "alignment index file (\"i j - k\" per line)")
      ->required();
  ingest->add_option("--translations", in_translations,
                     "TSV sidecar with English renderings of foreign segments");
  ingest->add_option("--english-side", in_english, "which bitext side is English: src|tgt")
      ->check(CLI::IsMember({"src", "tgt"}));
  ingest->add_option("--pivot-language", ingest_opts.pivot_language,
                     "language code of the non-English side");
  ingest->add_option("--source-corpus", ingest_opts.source_corpus, "corpus name for provenance");
  ingest->add_option("--id-prefix", ingest_opts.id_prefix, "record id prefix");
  ingest->add_option("--output", in_output, "output pair file")->required();
  ingest->add_option("--report", in_report, "also write the run summary to this file");

  // filter
  auto* filter = app.add_subcommand("filter", "apply the noise-removal cascade");
  CommonOpts filter_common;
  std::string filter_conllu;
  FilterConfig filter_cfg;
  add_common(filter, filter_common);
  filter->add_option("--conllu", filter_conllu, "CoNLL-U annotations keyed by record id");
  filter->add_option("--min-overlap", filter_cfg.min_overlap, "lexical overlap threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  filter->add_option("--min-sim", filter_cfg.min_similarity, "similarity threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  filter->add_flag("!--no-require-verb", filter_cfg.require_verb,
                   "skip the verb-presence check");
  filter->add_flag("--missing-pos-fails", filter_cfg.missing_pos_fails,
                   "reject records lacking POS annotations instead of passing them");
  filter->add_flag("!--no-sim-fallback", filter_cfg.token_f1_fallback,
                   "do not compute the token-F1 similarity stand-in");

  // categorize
  auto* categorize = app.add_subcommand("categorize", "assign split categories from parse trees");
  CommonOpts cat_common;
  std::string cat_trees;
  CategorizeConfig cat_cfg;
  add_common(categorize, cat_common);
  categorize->add_option("--trees", cat_trees, "bracketed trees, \"<id>\\t<tree>\" per line")
      ->required();
  categorize->add_option("--affix-len", cat_cfg.copied_affix_len,
                         "copied-affix length for the near-split rule")
      ->capture_default_str();
  categorize->add_option("--neighborhood", cat_cfg.split_neighborhood,
                         "edit distance from the split for \"only the split\"")
      ->capture_default_str();

  // label
  auto* label = app.add_subcommand("label", "build padded sequences and edit labels");
  CommonOpts label_common;
  std::size_t min_copy_run = 3;
  add_common(label, label_common);
  label->add_option("--min-copy-run", min_copy_run, "copy run length that ends the delta window")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // loss-eval
  auto* loss_eval = app.add_subcommand("loss-eval", "evaluate the adaptive loss on model outputs");
  std::string loss_input, loss_probs, loss_report;
  double loss_weight = 1.0;
  loss_eval->add_option("--input", loss_input, "labeled pair file")->required();
  loss_eval->add_option("--probs", loss_probs, "probability matrices keyed by record id")
      ->required();
  loss_eval->add_option("--weight", loss_weight, "classifier loss weight")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  loss_eval->add_option("--report", loss_report, "also write the results to this file");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score system outputs with the metric suite");
  std::string eval_source, eval_output, eval_ppdb, eval_report;
  std::vector<std::string> eval_refs;
  int eval_max_n = 4;
  bool eval_use_paraphrase = true;
  std::optional<double> eval_bscore;
  double eval_bscore_value = 0.0;
  evaluate->add_option("--source", eval_source, "source sentences, one per line")->required();
  evaluate->add_option("--output", eval_output, "system outputs, [SEP]-separated sentences")
      ->required();
  evaluate->add_option("--refs", eval_refs, "reference file(s), repeatable")->required();
  evaluate->add_option("--ppdb", eval_ppdb, "paraphrase table for extended matching");
  evaluate->add_option("--max-n", eval_max_n, "largest n-gram order")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  evaluate->add_flag("!--no-paraphrase", eval_use_paraphrase,
                     "disable paraphrase matching even when --ppdb is given");
  auto* bs_opt = evaluate->add_option("--bert-score", eval_bscore_value,
                                      "externally computed score column");
  evaluate->add_option("--report", eval_report, "also write the report to this file");

  // stats
  auto* stats = app.add_subcommand("stats", "corpus statistics for a pair file");
  std::string stats_input, stats_report;
  stats->add_option("--input", stats_input, "pair file")->required();
  stats->add_option("--report", stats_report, "also write the table to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      return cmd_ingest(in_src, in_tgt, in_align, in_translations, in_english, ingest_opts,
                        in_output, in_report);
    }
    if (filter->parsed()) return cmd_filter(filter_common, filter_conllu, filter_cfg);
    if (categorize->parsed()) return cmd_categorize(cat_common, cat_trees, cat_cfg);
    if (label->parsed()) return cmd_label(label_common, min_copy_run);
    if (loss_eval->parsed()) return cmd_loss_eval(loss_input, loss_probs, loss_weight, loss_report);
    if (evaluate->parsed()) {
      if (bs_opt->count() > 0) eval_bscore = eval_bscore_value;
      return cmd_evaluate(eval_source, eval_output, eval_refs, eval_ppdb, eval_max_n,
                          eval_use_paraphrase, eval_bscore, eval_report);
    }
    if (stats->parsed()) return cmd_stats(stats_input, stats_report);
  } catch (const std::runtime_error& e) {
    log_at(LogLevel::Error, e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    log_at(LogLevel::Error, std::string("internal error: ") + e.what());
    return kExitInternal;
  }
  return kExitOk;
}
