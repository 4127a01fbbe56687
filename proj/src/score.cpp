#include "feceval/score.hpp"

#include <map>
#include <tuple>

#include "feceval/classify.hpp"
#include "feceval/error.hpp"

namespace feceval {

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::Form: return "form";
    case Axis::Content: return "content";
    case Axis::Combined: return "combined";
    case Axis::Total: return "total";
  }
  return "?";
}

std::optional<Axis> parse_axis(std::string_view text) {
  if (text == "form") return Axis::Form;
  if (text == "content") return Axis::Content;
  if (text == "combined") return Axis::Combined;
  if (text == "total") return Axis::Total;
  return std::nullopt;
}

std::vector<std::string> axis_categories(Axis axis) {
  std::vector<std::string> keys;
  switch (axis) {
    case Axis::Form:
      keys = {"M", "R", "U"};
      break;
    case Axis::Content:
      for (int i = 0; i < kContentCodeCount; ++i) {
        keys.push_back(to_string(static_cast<ContentCode>(i)));
      }
      break;
    case Axis::Combined:
      for (FormCode form : {FormCode::M, FormCode::R, FormCode::U}) {
        for (int i = 0; i < kContentCodeCount; ++i) {
          keys.push_back(combined_code(form, static_cast<ContentCode>(i)));
        }
      }
      break;
    case Axis::Total:
      keys = {"Total"};
      break;
  }
  return keys;
}

std::string category_key(Axis axis, const Edit& edit) {
  if (axis == Axis::Total) return "Total";
  if (axis == Axis::Form) return to_string(edit.form());
  if (!edit.content) {
    throw ContractError("unclassified edit cannot be tallied on the " +
                        std::string(to_string(axis)) + " axis");
  }
  if (axis == Axis::Content) return to_string(*edit.content);
  return combined_code(edit.form(), *edit.content);
}

MatchResult match_edits(const EditSet& hyp, const EditSet& ref) {
  if (surfaces(hyp.original) != surfaces(ref.original)) {
    throw ContractError("edit sets '" + hyp.id + "' and '" + ref.id +
                        "' were built against different original sentences");
  }

  std::map<std::tuple<int, int, std::string>, std::size_t> ref_index;
  for (std::size_t i = 0; i < ref.edits.size(); ++i) {
    const Edit& edit = ref.edits[i];
    ref_index.emplace(std::tuple(edit.o_start, edit.o_end, edit.correction), i);
  }

  MatchResult result;
  std::vector<bool> ref_used(ref.edits.size(), false);
  for (const Edit& edit : hyp.edits) {
    const auto hit =
        ref_index.find(std::tuple(edit.o_start, edit.o_end, edit.correction));
    if (hit != ref_index.end() && !ref_used[hit->second]) {
      ref_used[hit->second] = true;
      result.matched.emplace_back(edit, ref.edits[hit->second]);
    } else {
      result.unmatched_hyp.push_back(edit);
    }
  }
  for (std::size_t i = 0; i < ref.edits.size(); ++i) {
    if (!ref_used[i]) result.unmatched_ref.push_back(ref.edits[i]);
  }
  return result;
}

CountMap tally(const MatchResult& result, Axis axis) {
  CountMap map;
  map.axis = axis;
  for (const auto& [hyp_edit, ref_edit] : result.matched) {
    (void)hyp_edit;
    ++map.counts[category_key(axis, ref_edit)].tp;
  }
  for (const Edit& edit : result.unmatched_hyp) {
    ++map.counts[category_key(axis, edit)].fp;
  }
  for (const Edit& edit : result.unmatched_ref) {
    ++map.counts[category_key(axis, edit)].fn;
  }
  return map;
}

ScoreTriple f_beta(const CategoryCounts& counts, double beta) {
  ScoreTriple triple;
  if (counts.tp == 0 && counts.fp == 0 && counts.fn == 0) return triple;
  triple.defined = true;
  triple.precision =
      counts.tp + counts.fp == 0
          ? 1.0
          : static_cast<double>(counts.tp) / (counts.tp + counts.fp);
  triple.recall =
      counts.tp + counts.fn == 0
          ? 1.0
          : static_cast<double>(counts.tp) / (counts.tp + counts.fn);
  const double b2 = beta * beta;
  const double denominator = b2 * triple.precision + triple.recall;
  triple.f = denominator == 0.0 ? 0.0
                                : (1.0 + b2) * triple.precision *
                                      triple.recall / denominator;
  return triple;
}

ScoreTriple ScoreReport::triple(const std::string& category) const {
  const auto it = categories.find(category);
  return f_beta(it == categories.end() ? CategoryCounts{} : it->second, beta);
}

ScoreTriple ScoreReport::total_triple() const { return f_beta(total, beta); }

ScoreReport aggregate(const std::vector<CountMap>& maps, double beta) {
  ScoreReport report;
  report.beta = beta;
  if (!maps.empty()) report.axis = maps.front().axis;
  for (const CountMap& map : maps) {
    if (map.axis != report.axis) {
      throw ContractError("cannot aggregate count maps from different axes");
    }
    for (const auto& [key, counts] : map.counts) {
      CategoryCounts& sum = report.categories[key];
      sum.tp += counts.tp;
      sum.fp += counts.fp;
      sum.fn += counts.fn;
      report.total.tp += counts.tp;
      report.total.fp += counts.fp;
      report.total.fn += counts.fn;
    }
  }
  return report;
}

}  // namespace feceval
