#include "feceval/pipeline.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "feceval/annotate.hpp"
#include "feceval/classify.hpp"
#include "feceval/conllu.hpp"
#include "feceval/editfile.hpp"
#include "feceval/error.hpp"
#include "feceval/parallel.hpp"

namespace feceval {

const char* field_suffix(Field field) {
  switch (field) {
    case Field::Original: return "orig";
    case Field::Reference: return "ref";
    case Field::Hypothesis: return "hyp";
  }
  return "?";
}

AnnotationProvider AnnotationProvider::external(
    std::vector<AnnotatedSentence> sentences) {
  AnnotationProvider provider;
  provider.kind_ = AnnotatorKind::External;
  for (AnnotatedSentence& sentence : sentences) {
    validate(sentence);
    const std::string key = sentence.id;
    if (!provider.by_id_.emplace(key, std::move(sentence)).second) {
      throw DataError("duplicate annotation id '" + key + "'");
    }
  }
  return provider;
}

AnnotationProvider AnnotationProvider::builtin() {
  AnnotationProvider provider;
  provider.kind_ = AnnotatorKind::Builtin;
  return provider;
}

AnnotatedSentence AnnotationProvider::get(const DatasetItem& item,
                                          Field field) const {
  const std::string* text = nullptr;
  switch (field) {
    case Field::Original: text = &item.original; break;
    case Field::Reference: text = &item.reference; break;
    case Field::Hypothesis:
      if (!item.hypothesis) {
        throw DataError("item '" + item.id + "' has no hypothesis");
      }
      text = &*item.hypothesis;
      break;
  }
  const std::string id = item.id + "." + field_suffix(field);
  if (kind_ == AnnotatorKind::Builtin) return heuristic_annotate(*text, id);
  const auto hit = by_id_.find(id);
  if (hit == by_id_.end()) {
    throw DataError("no annotation found for id '" + id + "'");
  }
  return hit->second;
}

std::vector<EditSet> extract_all(const std::vector<DatasetItem>& items,
                                 const AnnotationProvider& annotations,
                                 Field target, bool classify_edits,
                                 unsigned jobs) {
  return parallel_map(
      items,
      [&](const DatasetItem& item) {
        const AnnotatedSentence original =
            annotations.get(item, Field::Original);
        const AnnotatedSentence corrected = annotations.get(item, target);
        EditSet set = extract_edits(original, corrected,
                                    align(original, corrected));
        set.id = item.id;
        if (classify_edits) set = classify_all(std::move(set));
        return set;
      },
      jobs);
}

ScoreReport compare_sets(const std::vector<EditSet>& hyp,
                         const std::vector<EditSet>& ref, Axis axis,
                         double beta, unsigned jobs) {
  if (hyp.size() != ref.size()) {
    throw DataError("hypothesis and reference edit sets differ in size (" +
                    std::to_string(hyp.size()) + " vs " +
                    std::to_string(ref.size()) + ")");
  }
  std::vector<std::size_t> indices(hyp.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  const std::vector<CountMap> maps = parallel_map(
      indices,
      [&](std::size_t i) {
        if (hyp[i].id != ref[i].id) {
          throw DataError("edit set ids diverge at position " +
                          std::to_string(i) + ": '" + hyp[i].id + "' vs '" +
                          ref[i].id + "'");
        }
        if (surfaces(hyp[i].original) != surfaces(ref[i].original)) {
          throw DataError("original sentences differ for id '" + hyp[i].id +
                          "'");
        }
        return tally(match_edits(hyp[i], ref[i]), axis);
      },
      jobs);
  ScoreReport report = aggregate(maps, beta);
  report.axis = axis;  // aggregate of an empty corpus keeps the request
  return report;
}

namespace {

AnnotationProvider load_annotations(const RunConfig& config) {
  if (config.annotator == AnnotatorKind::Builtin) {
    if (!config.annotations_path.empty()) {
      throw DataError(
          "builtin annotator and an annotations file are mutually exclusive");
    }
    return AnnotationProvider::builtin();
  }
  if (config.annotations_path.empty()) {
    throw DataError(
        "external annotator needs --annotations (or pass --annotator builtin)");
  }
  return AnnotationProvider::external(
      parse_conllu_file(config.annotations_path));
}

struct GroupKey {
  std::string corpus, system;
  bool operator<(const GroupKey& other) const {
    return std::tie(corpus, system) < std::tie(other.corpus, other.system);
  }
};

struct ItemDerived {
  std::vector<std::string> original, reference;
  std::vector<std::string> hypothesis;  // meaningful only when has_hypothesis
  bool has_hypothesis = false;
  EditSet reference_edits;
};

}  // namespace

std::vector<CorpusStats> compute_stats(const std::vector<DatasetItem>& items,
                                       const AnnotationProvider& annotations,
                                       unsigned jobs) {
  const std::vector<ItemDerived> derived = parallel_map(
      items,
      [&](const DatasetItem& item) {
        ItemDerived out;
        const AnnotatedSentence original =
            annotations.get(item, Field::Original);
        const AnnotatedSentence reference =
            annotations.get(item, Field::Reference);
        out.original = surfaces(original);
        out.reference = surfaces(reference);
        if (item.hypothesis) {
          out.hypothesis = surfaces(annotations.get(item, Field::Hypothesis));
          out.has_hypothesis = true;
        }
        out.reference_edits = classify_all(
            extract_edits(original, reference, align(original, reference)));
        return out;
      },
      jobs);

  std::map<GroupKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    groups[{items[i].corpus.value_or(""), items[i].system.value_or("")}]
        .push_back(i);
  }

  std::vector<CorpusStats> rows;
  for (const auto& [key, members] : groups) {
    CorpusStats row;
    row.corpus = key.corpus;
    row.system = key.system;
    row.items = static_cast<long>(members.size());

    std::vector<std::size_t> with_errors;
    std::vector<EditSet> edit_sets;
    for (std::size_t i : members) {
      if (derived[i].reference != derived[i].original) with_errors.push_back(i);
      edit_sets.push_back(derived[i].reference_edits);
    }
    row.items_with_errors = static_cast<long>(with_errors.size());
    row.error_rate = 100.0 * static_cast<double>(with_errors.size()) /
                     static_cast<double>(members.size());
    row.category_distribution = category_distribution(edit_sets);

    if (!with_errors.empty()) {
      double original_sum = 0.0, reference_sum = 0.0, hypothesis_sum = 0.0;
      long hypothesis_count = 0;
      std::vector<std::vector<std::string>> originals, references, hypotheses,
          originals_with_hyp;
      for (std::size_t i : with_errors) {
        original_sum += static_cast<double>(derived[i].original.size());
        reference_sum += static_cast<double>(derived[i].reference.size());
        originals.push_back(derived[i].original);
        references.push_back(derived[i].reference);
        if (derived[i].has_hypothesis) {
          hypothesis_sum += static_cast<double>(derived[i].hypothesis.size());
          ++hypothesis_count;
          originals_with_hyp.push_back(derived[i].original);
          hypotheses.push_back(derived[i].hypothesis);
        }
      }
      const double count = static_cast<double>(with_errors.size());
      row.avg_len_original = original_sum / count;
      row.avg_len_reference = reference_sum / count;
      row.bleu_origin_vs_reference = corpus_bleu(originals, references);
      if (hypothesis_count > 0) {
        row.avg_len_corrected =
            hypothesis_sum / static_cast<double>(hypothesis_count);
        row.bleu_origin_vs_corrected =
            corpus_bleu(originals_with_hyp, hypotheses);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string run_extract(const RunConfig& config) {
  const std::vector<DatasetItem> items = parse_dataset_file(config.dataset_path);
  const AnnotationProvider annotations = load_annotations(config);
  if (config.side == Field::Original) {
    throw DataError("extraction target must be 'ref' or 'hyp'");
  }
  return write_edit_file(extract_all(items, annotations, config.side,
                                     config.classify_edits, config.jobs));
}

std::string run_compare(const RunConfig& config) {
  const std::vector<EditSet> hyp = parse_edit_file(config.hyp_edits_path);
  const std::vector<EditSet> ref = parse_edit_file(config.ref_edits_path);
  return render_report(
      compare_sets(hyp, ref, config.axis, config.beta, config.jobs),
      config.format);
}

std::string run_evaluate(const RunConfig& config) {
  const std::vector<DatasetItem> items = parse_dataset_file(config.dataset_path);
  const AnnotationProvider annotations = load_annotations(config);
  const std::vector<EditSet> ref = extract_all(
      items, annotations, Field::Reference, config.classify_edits, config.jobs);
  const std::vector<EditSet> hyp = extract_all(
      items, annotations, Field::Hypothesis, config.classify_edits, config.jobs);
  return render_report(
      compare_sets(hyp, ref, config.axis, config.beta, config.jobs),
      config.format);
}

std::string run_stats(const RunConfig& config) {
  const std::vector<DatasetItem> items = parse_dataset_file(config.dataset_path);
  const AnnotationProvider annotations = load_annotations(config);
  return render_stats(compute_stats(items, annotations, config.jobs),
                      config.format);
}

}  // namespace feceval
