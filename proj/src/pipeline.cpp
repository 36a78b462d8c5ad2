#include "splitkit/pipeline.hpp"

#include <sstream>
#include <thread>

#include "splitkit/edit_align.hpp"

namespace splitkit {

std::vector<PairRecord> parallel_map_records(
    std::vector<PairRecord> records, std::size_t jobs,
    const std::function<PairRecord(PairRecord)>& fn) {
  if (jobs <= 1 || records.size() < 2 * jobs) {
    for (auto& rec : records) rec = fn(std::move(rec));
    return records;
  }
  const std::size_t n = records.size();
  const std::size_t shard = (n + jobs - 1) / jobs;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::size_t begin = w * shard;
    const std::size_t end = std::min(n, begin + shard);
    if (begin >= end) break;
    workers.emplace_back([&records, &fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        records[i] = fn(std::move(records[i]));
      }
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

std::vector<PairRecord> filter_records(std::vector<PairRecord> records,
                                       const std::map<std::string, ConlluSentence>& annotations,
                                       const FilterConfig& cfg, std::size_t jobs,
                                       StageSummary& summary) {
  summary.records_in = records.size();
  auto process = [&](PairRecord rec) -> PairRecord {
    const DependencyGraph* long_dep = nullptr;
    const std::array<std::pair<Sentence*, std::string>, 3> sides = {{
        {&rec.longer, rec.id + ".long"},
        {&rec.split[0], rec.id + ".s1"},
        {&rec.split[1], rec.id + ".s2"},
    }};
    try {
      for (const auto& [sentence, key] : sides) {
        auto it = annotations.find(key);
        if (it == annotations.end()) continue;
        apply_annotations(*sentence, it->second);
        if (sentence == &rec.longer) long_dep = &it->second.dep;
      }
      return run_filters(std::move(rec), cfg, std::nullopt, long_dep);
    } catch (const std::exception&) {
      rec.scores["stage_error"] = 1.0;
      return rec;
    }
  };

  records = parallel_map_records(std::move(records), jobs, process);
  for (const auto& rec : records) {
    if (rec.scores.count("stage_error")) {
      ++summary.counters["error:bad_annotations"];
      summary.record_errors.push_back(rec.id + ": annotations do not match record tokens");
    } else if (rec.status == PairStatus::Rejected) {
      ++summary.counters["rejected:" + rec.reject_reason];
    } else {
      ++summary.counters["filtered"];
    }
  }
  summary.records_out = records.size();
  return records;
}

std::vector<PairRecord> categorize_records(std::vector<PairRecord> records,
                                           const std::map<std::string, ConstituencyTree>& trees,
                                           const CategorizeConfig& cfg, std::size_t jobs,
                                           StageSummary& summary) {
  summary.records_in = records.size();
  auto process = [&](PairRecord rec) -> PairRecord {
    if (rec.status == PairStatus::Rejected) return rec;
    auto it = trees.find(rec.id);
    if (it == trees.end()) return rec;  // counted below
    rec.category = classify(rec, it->second, cfg);
    return rec;
  };
  records = parallel_map_records(std::move(records), jobs, process);
  for (const auto& rec : records) {
    if (rec.status == PairStatus::Rejected) {
      ++summary.counters["skipped:rejected"];
    } else if (!rec.category) {
      ++summary.counters["skipped:missing_tree"];
      summary.record_errors.push_back(rec.id + ": no tree in sidecar");
    } else {
      ++summary.counters[std::string("category:") + to_string(*rec.category)];
    }
  }
  summary.records_out = records.size();
  return records;
}

std::vector<PairRecord> label_records(std::vector<PairRecord> records, std::size_t min_copy_run,
                                      std::size_t jobs, StageSummary& summary) {
  summary.records_in = records.size();
  auto process = [&](PairRecord rec) -> PairRecord {
    if (rec.status == PairStatus::Rejected || !rec.category) return rec;
    try {
      rec.delta = align_pair(rec.longer.tokens, target_tokens(rec), *rec.category, min_copy_run);
    } catch (const std::exception&) {
      rec.scores["stage_error"] = 1.0;
    }
    return rec;
  };
  records = parallel_map_records(std::move(records), jobs, process);
  for (const auto& rec : records) {
    if (rec.delta) {
      ++summary.counters["labeled"];
    } else if (rec.scores.count("stage_error")) {
      ++summary.counters["error:align_failed"];
      summary.record_errors.push_back(rec.id + ": could not build the edit alignment");
    } else if (rec.status == PairStatus::Rejected) {
      ++summary.counters["skipped:rejected"];
    } else {
      ++summary.counters["skipped:uncategorized"];
    }
  }
  summary.records_out = records.size();
  return records;
}

std::string format_summary(const std::string& stage, const StageSummary& summary) {
  std::ostringstream os;
  os << stage << ": " << summary.records_in << " in, " << summary.records_out << " out";
  for (const auto& [key, count] : summary.counters) {
    os << "\n  " << key << " = " << count;
  }
  for (const auto& err : summary.record_errors) {
    os << "\n  error: " << err;
  }
  return os.str();
}

}  // namespace splitkit
