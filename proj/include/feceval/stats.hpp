#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feceval/align.hpp"
#include "feceval/text.hpp"

namespace feceval {

// Corpus-level BLEU, n-gram orders 1-4 with uniform weights, clipped counts,
// brevity penalty exp(1 - r/c) for c < r, no smoothing. Orders with zero
// possible candidate n-grams are dropped from the geometric mean. Throws
// ContractError on an empty corpus or length mismatch.
double corpus_bleu(const std::vector<std::vector<std::string>>& candidates,
                   const std::vector<std::vector<std::string>>& references);

// Percentage of items whose tokenized reference differs from the tokenized
// original (whitespace-only differences do not count). Throws ContractError
// on an empty item list.
double error_rate(const std::vector<DatasetItem>& items);

// Share of each content category over all classified edits; empty input
// yields an empty map. Shares sum to 1 when any edits exist.
std::map<ContentCode, double> category_distribution(
    const std::vector<EditSet>& edit_sets);

// Per corpus x system group summary. Means and BLEU cover only items whose
// reference differs from the original; fields are unset when that filtered
// set is empty (or, for the corrected/hypothesis side, when no item in it
// carries a hypothesis).
struct CorpusStats {
  std::string corpus;
  std::string system;
  long items = 0;
  long items_with_errors = 0;
  double error_rate = 0.0;
  std::optional<double> avg_len_original;
  std::optional<double> avg_len_reference;
  std::optional<double> avg_len_corrected;
  std::optional<double> bleu_origin_vs_reference;
  std::optional<double> bleu_origin_vs_corrected;
  std::map<ContentCode, double> category_distribution;
};

}  // namespace feceval
