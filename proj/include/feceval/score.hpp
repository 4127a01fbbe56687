#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feceval/align.hpp"

namespace feceval {

enum class Axis { Form, Content, Combined, Total };

const char* to_string(Axis axis);
std::optional<Axis> parse_axis(std::string_view text);

// Category keys for an axis in rendering order: M/R/U for form, the content
// table order for content, form-major combinations for combined, and the
// single "Total" bucket for total.
std::vector<std::string> axis_categories(Axis axis);

// Key an edit contributes to under an axis. Throws ContractError when the
// axis needs a content code and the edit is unclassified.
std::string category_key(Axis axis, const Edit& edit);

struct CategoryCounts {
  long tp = 0, fp = 0, fn = 0;

  bool operator==(const CategoryCounts&) const = default;
};

struct CountMap {
  Axis axis = Axis::Form;
  std::map<std::string, CategoryCounts> counts;
};

struct MatchResult {
  std::vector<std::pair<Edit, Edit>> matched;  // (hypothesis, reference)
  std::vector<Edit> unmatched_hyp;
  std::vector<Edit> unmatched_ref;
};

// One-to-one matching on (o_start, o_end, correction), compared
// case-sensitively. Throws ContractError when the two sets were built
// against different original token sequences.
MatchResult match_edits(const EditSet& hyp, const EditSet& ref);

// Matched pairs count as TP under the *reference* edit's category; unmatched
// hypothesis edits as FP under their own; unmatched reference edits as FN
// under their own.
CountMap tally(const MatchResult& result, Axis axis);

// Precision tp/(tp+fp) and recall tp/(tp+fn) with the 0/0 -> 1 convention;
// F_beta = (1+b^2)PR/(b^2 P + R), 0 when the denominator is 0. The triple is
// undefined iff tp = fp = fn = 0.
struct ScoreTriple {
  bool defined = false;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

ScoreTriple f_beta(const CategoryCounts& counts, double beta);

struct ScoreReport {
  Axis axis = Axis::Form;
  double beta = 0.5;
  std::map<std::string, CategoryCounts> categories;
  CategoryCounts total;

  ScoreTriple triple(const std::string& category) const;
  ScoreTriple total_triple() const;
};

// Micro-average: sums per-category counts across maps, then computes scores
// once. Throws ContractError when maps disagree on the axis.
ScoreReport aggregate(const std::vector<CountMap>& maps, double beta);

}  // namespace feceval
