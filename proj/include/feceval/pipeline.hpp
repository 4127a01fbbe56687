#pragma once

#include <map>
#include <string>
#include <vector>

#include "feceval/dataset.hpp"
#include "feceval/report.hpp"
#include "feceval/score.hpp"
#include "feceval/stats.hpp"

namespace feceval {

enum class AnnotatorKind { External, Builtin };
enum class Field { Original, Reference, Hypothesis };

const char* field_suffix(Field field);  // "orig" / "ref" / "hyp"

// Supplies the annotated sentence for an item's original / reference /
// hypothesis text. External annotations bind through sentence ids
// "<item-id>.orig|ref|hyp"; the builtin provider runs heuristic_annotate on
// the raw text and only ever backs an explicit --annotator builtin request.
class AnnotationProvider {
 public:
  static AnnotationProvider external(std::vector<AnnotatedSentence> sentences);
  static AnnotationProvider builtin();

  // Throws DataError naming the sentence id when an external annotation is
  // missing, and when the item lacks the requested field entirely.
  AnnotatedSentence get(const DatasetItem& item, Field field) const;

 private:
  AnnotationProvider() = default;
  AnnotatorKind kind_ = AnnotatorKind::Builtin;
  std::map<std::string, AnnotatedSentence> by_id_;
};

// Aligns each item's original against the chosen field and extracts (and,
// unless disabled, classifies) its edits. Output order follows item order for
// any job count.
std::vector<EditSet> extract_all(const std::vector<DatasetItem>& items,
                                 const AnnotationProvider& annotations,
                                 Field target, bool classify_edits,
                                 unsigned jobs);

// Matches and tallies hypothesis against reference EditSets pairwise and
// micro-averages. Set lists must agree on ids, order, and original token
// sequences; the first divergence raises DataError naming the id.
ScoreReport compare_sets(const std::vector<EditSet>& hyp,
                         const std::vector<EditSet>& ref, Axis axis,
                         double beta, unsigned jobs);

// Per corpus x system rows, ordered by group key. Token sequences, the
// error filter, and BLEU all use the provider's annotations; the category
// distribution comes from the classified original-vs-reference edits.
std::vector<CorpusStats> compute_stats(const std::vector<DatasetItem>& items,
                                       const AnnotationProvider& annotations,
                                       unsigned jobs);

struct RunConfig {
  std::string dataset_path;
  std::string annotations_path;
  AnnotatorKind annotator = AnnotatorKind::External;
  Field side = Field::Reference;  // extract target
  bool classify_edits = true;
  Axis axis = Axis::Form;
  double beta = 0.5;
  OutputFormat format = OutputFormat::Json;
  unsigned jobs = 1;
  std::string hyp_edits_path;
  std::string ref_edits_path;
};

// Subcommand cores; each returns the full output document. run_evaluate is
// byte-equivalent to run_extract on both sides piped through run_compare.
std::string run_extract(const RunConfig& config);
std::string run_compare(const RunConfig& config);
std::string run_evaluate(const RunConfig& config);
std::string run_stats(const RunConfig& config);

}  // namespace feceval
