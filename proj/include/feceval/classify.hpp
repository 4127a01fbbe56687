#pragma once

#include <bitset>
#include <optional>
#include <string>
#include <string_view>

#include "feceval/align.hpp"

namespace feceval {

// Table code with the trailing "E" (Ent:ObjE, Pred:NegE, ..., OthE); used in
// edit files and content-axis reports.
const char* to_string(ContentCode code);
std::optional<ContentCode> parse_content_code(std::string_view text);

// Short rendering without the trailing "E", e.g. "Pred:Neg".
const char* short_code(ContentCode code);

constexpr int kContentCodeCount = 11;

// Form and content combined, rendered "<form>:<short>" (e.g. "R:Pred:Neg").
std::string combined_code(FormCode form, ContentCode code);

// Detectors in cascade order; the first that fires wins. Used by tests to
// check that masking earlier detectors never changes edits they did not
// claim.
enum class Detector {
  PredNeg, Num, PredMod, PredTens, Coref,
  Link, EntObj, EntAttr, PredVerb, Circ, Oth,
};

using DetectorMask = std::bitset<11>;

inline DetectorMask all_detectors() { return DetectorMask().set(); }

// Assigns a content category from the edit's spans alone. Tokens outside
// [o_start, o_end) x [c_start, c_end) never influence the result.
ContentCode classify(const Edit& edit, const AnnotatedSentence& original,
                     const AnnotatedSentence& corrected,
                     DetectorMask enabled = all_detectors());

// Classifies every edit in place and returns the set.
EditSet classify_all(EditSet set);

}  // namespace feceval
