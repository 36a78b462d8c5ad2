#include "splitkit/filter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "splitkit/text.hpp"

namespace splitkit {

bool token_has_intratoken_punct(const std::string& token) {
  const auto cps = decode_utf8(token);
  std::size_t alpha_before = 0;
  // alpha_after[i] = alphabetic codepoints strictly after position i.
  std::vector<std::size_t> alpha_after(cps.size() + 1, 0);
  for (std::size_t i = cps.size(); i-- > 0;) {
    alpha_after[i] = alpha_after[i + 1] + (is_alpha_cp(cps[i]) ? 1 : 0);
  }
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_punct_cp(cps[i]) && alpha_before >= 2 && alpha_after[i + 1] >= 2) {
      return true;
    }
    if (is_alpha_cp(cps[i])) ++alpha_before;
  }
  return false;
}

bool has_intratoken_punct(const Sentence& sentence) {
  return std::any_of(sentence.tokens.begin(), sentence.tokens.end(),
                     token_has_intratoken_punct);
}

bool is_connected(const DependencyGraph& dep) {
  const std::size_t n = dep.n;
  if (dep.heads.size() != n) {
    throw std::invalid_argument("dependency heads length does not match token count");
  }
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i) {
    const int head = dep.heads[i];
    if (head == 0) continue;  // artificial root, not a token
    const auto a = find(i);
    const auto b = find(static_cast<std::size_t>(head - 1));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::set<std::string> lemma_set(const Sentence& sentence, bool* used_fallback) {
  std::set<std::string> out;
  if (sentence.lemmas) {
    if (used_fallback) *used_fallback = false;
    for (const auto& lemma : *sentence.lemmas) out.insert(lowercase(lemma));
  } else {
    if (used_fallback) *used_fallback = true;
    for (const auto& token : sentence.tokens) out.insert(lowercase(token));
  }
  return out;
}

namespace {

double intersection_ratio(const std::set<std::string>& reference,
                          const std::set<std::string>& target) {
  std::size_t hits = 0;
  for (const auto& item : target) hits += reference.count(item);
  return static_cast<double>(hits) / static_cast<double>(target.size());
}

}  // namespace

double overlap_ratio(const Sentence& longer, const Sentence& s1, const Sentence& s2) {
  const auto ll = lemma_set(longer);
  const auto l1 = lemma_set(s1);
  const auto l2 = lemma_set(s2);
  if (ll.empty() || l1.empty() || l2.empty()) {
    throw std::invalid_argument("overlap_ratio: empty lemma set");
  }
  std::set<std::string> lu = l1;
  lu.insert(l2.begin(), l2.end());
  const double r1 = intersection_ratio(ll, l1);
  const double r2 = intersection_ratio(ll, l2);
  const double ru = intersection_ratio(ll, lu);
  return std::min({r1, r2, ru});
}

bool contains_verb(const Sentence& sentence) {
  if (!sentence.upos) return false;
  return std::any_of(sentence.upos->begin(), sentence.upos->end(),
                     [](const std::string& tag) { return tag == "VERB" || tag == "AUX"; });
}

double token_f1_similarity(const PairRecord& rec) {
  std::map<std::string, std::size_t> long_counts, split_counts;
  for (const auto& tok : rec.longer.tokens) ++long_counts[lowercase(tok)];
  for (const auto& side : rec.split) {
    for (const auto& tok : side.tokens) ++split_counts[lowercase(tok)];
  }
  std::size_t overlap = 0, split_total = 0;
  for (const auto& [tok, count] : split_counts) {
    split_total += count;
    auto it = long_counts.find(tok);
    if (it != long_counts.end()) overlap += std::min(count, it->second);
  }
  const std::size_t long_total = rec.longer.tokens.size();
  if (long_total == 0 || split_total == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(split_total);
  const double recall = static_cast<double>(overlap) / static_cast<double>(long_total);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

PairRecord run_filters(PairRecord pair, const FilterConfig& cfg, std::optional<double> sim,
                       const DependencyGraph* long_dep) {
  auto reject = [&pair](const char* reason) -> PairRecord {
    pair.status = PairStatus::Rejected;
    pair.reject_reason = reason;
    return std::move(pair);
  };

  if (has_intratoken_punct(pair.longer)) return reject(reject::kIntratokenPunct);

  if (long_dep != nullptr) {
    if (long_dep->n != pair.longer.tokens.size()) {
      throw std::invalid_argument("dependency graph does not match long sentence tokens for " +
                                  pair.id);
    }
    if (!is_connected(*long_dep)) return reject(reject::kDisconnectedParse);
  }

  bool fallback = false;
  for (const Sentence* s : {&pair.longer, &pair.split[0], &pair.split[1]}) {
    bool used = false;
    lemma_set(*s, &used);
    fallback = fallback || used;
  }
  if (fallback) pair.scores["fallback_lemmas"] = 1.0;
  const double r = overlap_ratio(pair.longer, pair.split[0], pair.split[1]);
  pair.scores["overlap_r"] = r;
  if (r < cfg.min_overlap) return reject(reject::kLowOverlap);

  if (cfg.require_verb) {
    for (const Sentence* s : {&pair.longer, &pair.split[0], &pair.split[1]}) {
      if (!s->upos) {
        if (cfg.missing_pos_fails) return reject(reject::kNoVerb);
        continue;  // warn-and-pass: no annotations to check against
      }
      if (!contains_verb(*s)) return reject(reject::kNoVerb);
    }
  }

  std::optional<double> similarity = sim;
  if (!similarity) {
    auto it = pair.scores.find("similarity");
    if (it != pair.scores.end()) similarity = it->second;
  }
  if (!similarity && cfg.token_f1_fallback) {
    similarity = token_f1_similarity(pair);
    pair.scores["similarity_token_f1"] = *similarity;
  }
  if (similarity) {
    pair.scores["similarity"] = *similarity;
    if (*similarity < cfg.min_similarity) return reject(reject::kLowSimilarity);
  }

  pair.status = PairStatus::Filtered;
  pair.reject_reason.clear();
  return pair;
}

}  // namespace splitkit
