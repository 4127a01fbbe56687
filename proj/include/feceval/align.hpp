#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feceval/text.hpp"

namespace feceval {

enum class OpKind { Match, Substitute, Insert, Delete, Transpose };

const char* to_string(OpKind kind);

// One step of a monotone token alignment. Spans are half-open index ranges
// into the original (o) and corrected (c) sentences. Match/Substitute spans
// have length 1 on both sides, Insert has an empty o-span, Delete an empty
// c-span, Transpose length 2 on both sides with cross-equal lowercased
// surfaces.
struct AlignmentOp {
  OpKind kind = OpKind::Match;
  int o_begin = 0, o_end = 0;
  int c_begin = 0, c_end = 0;

  bool operator==(const AlignmentOp&) const = default;
};

enum class FormCode { M, R, U };  // Missing / Replaced / Unnecessary

const char* to_string(FormCode form);
std::optional<FormCode> parse_form_code(std::string_view text);

enum class ContentCode {
  EntObj, EntAttr, PredMod, PredTens, PredNeg, PredVerb,
  Circ, Coref, Link, Num, Oth,
};

struct Edit {
  int o_start = 0, o_end = 0;
  int c_start = 0, c_end = 0;
  std::optional<ContentCode> content;  // unset until classified
  std::string correction;             // space-joined corrected-span surfaces

  FormCode form() const {
    if (o_start == o_end) return FormCode::M;
    if (c_start == c_end) return FormCode::U;
    return FormCode::R;
  }

  bool operator==(const Edit&) const = default;
};

struct EditSet {
  std::string id;
  AnnotatedSentence original;
  AnnotatedSentence corrected;
  std::vector<Edit> edits;  // sorted by o_start, non-overlapping
};

// Weighted substitution cost in [0, 1.499]: 0 for identical surfaces,
// otherwise lemma mismatch (0.499) + UPOS distance (0 / 0.25 within the
// verbal or nominal group / 0.5) + character dissimilarity
// 0.5 * (1 - 2*LCS/(|a|+|b|)) over lowercased surfaces.
double sub_cost(const AnnotatedToken& a, const AnnotatedToken& b);

// Minimal-cost monotone alignment under costs {match 0, substitute
// sub_cost, insert 1, delete 1, adjacent transposition 1}. Equal-cost
// candidates resolve as match > substitute > transpose > delete > insert,
// making the op sequence deterministic.
std::vector<AlignmentOp> align(const AnnotatedSentence& original,
                               const AnnotatedSentence& corrected);

// Collapses each maximal run of non-match ops into one Edit and fills in the
// correction strings. Transpositions count as non-match run members, and runs
// merge across any token kind, punctuation included.
EditSet extract_edits(const AnnotatedSentence& original,
                      const AnnotatedSentence& corrected,
                      const std::vector<AlignmentOp>& path);

// Splices edit corrections into the original token sequence. Throws
// ContractError on out-of-bounds or overlapping spans.
std::vector<std::string> apply_edits(const AnnotatedSentence& original,
                                     const std::vector<Edit>& edits);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace feceval
