#include "feceval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "feceval/annotate.hpp"
#include "feceval/error.hpp"

namespace feceval {

namespace {

using Ngram = std::vector<std::string>;

std::map<Ngram, long> ngram_counts(const std::vector<std::string>& tokens,
                                   std::size_t order) {
  std::map<Ngram, long> counts;
  if (tokens.size() < order) return counts;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    ++counts[Ngram(tokens.begin() + i, tokens.begin() + i + order)];
  }
  return counts;
}

}  // namespace

double corpus_bleu(const std::vector<std::vector<std::string>>& candidates,
                   const std::vector<std::vector<std::string>>& references) {
  if (candidates.size() != references.size()) {
    throw ContractError("BLEU corpus sides have different sizes");
  }
  if (candidates.empty()) {
    throw ContractError("BLEU is undefined for an empty corpus");
  }

  constexpr std::size_t kMaxOrder = 4;
  long matched[kMaxOrder] = {0, 0, 0, 0};
  long possible[kMaxOrder] = {0, 0, 0, 0};
  long candidate_length = 0, reference_length = 0;

  for (std::size_t pair = 0; pair < candidates.size(); ++pair) {
    const auto& candidate = candidates[pair];
    const auto& reference = references[pair];
    candidate_length += static_cast<long>(candidate.size());
    reference_length += static_cast<long>(reference.size());
    for (std::size_t order = 1; order <= kMaxOrder; ++order) {
      const auto candidate_grams = ngram_counts(candidate, order);
      if (candidate_grams.empty()) continue;
      const auto reference_grams = ngram_counts(reference, order);
      for (const auto& [gram, count] : candidate_grams) {
        possible[order - 1] += count;
        const auto hit = reference_grams.find(gram);
        if (hit != reference_grams.end()) {
          matched[order - 1] += std::min(count, hit->second);
        }
      }
    }
  }

  double log_sum = 0.0;
  int orders_used = 0;
  for (std::size_t order = 0; order < kMaxOrder; ++order) {
    if (possible[order] == 0) continue;
    ++orders_used;
    if (matched[order] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched[order]) /
                        static_cast<double>(possible[order]));
  }

  const double brevity =
      candidate_length < reference_length && candidate_length > 0
          ? std::exp(1.0 - static_cast<double>(reference_length) /
                               static_cast<double>(candidate_length))
          : (candidate_length == 0 && reference_length > 0 ? 0.0 : 1.0);
  if (orders_used == 0) return brevity;
  return brevity * std::exp(log_sum / orders_used);
}

double error_rate(const std::vector<DatasetItem>& items) {
  if (items.empty()) {
    throw ContractError("error rate is undefined for an empty item list");
  }
  long with_errors = 0;
  for (const DatasetItem& item : items) {
    if (tokenize(item.reference) != tokenize(item.original)) ++with_errors;
  }
  return 100.0 * static_cast<double>(with_errors) /
         static_cast<double>(items.size());
}

std::map<ContentCode, double> category_distribution(
    const std::vector<EditSet>& edit_sets) {
  std::map<ContentCode, long> counts;
  long total = 0;
  for (const EditSet& set : edit_sets) {
    for (const Edit& edit : set.edits) {
      if (!edit.content) {
        throw ContractError(
            "category distribution needs classified edits (set '" + set.id +
            "')");
      }
      ++counts[*edit.content];
      ++total;
    }
  }
  std::map<ContentCode, double> shares;
  for (const auto& [code, count] : counts) {
    shares[code] = static_cast<double>(count) / static_cast<double>(total);
  }
  return shares;
}

}  // namespace feceval
