#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "feceval/align.hpp"

namespace feceval {

// Edit interchange format, one block per sentence pair:
//
//   # id = <item-id>
//   S <space-joined original tokens>
//   A <o_start> <o_end>|||<FORM>:<CONTENT>|||<correction>|||REQUIRED|||-NONE-|||0
//   <blank line>
//
// CONTENT is a content table code or NA for unclassified edits; the
// correction field is empty for deletions (-NONE- is accepted on read).
std::string write_edit_file(const std::vector<EditSet>& sets);

// Rebuilds EditSets from a file. Original/corrected sentences carry surfaces
// only (lemma = lowercased surface, UPOS X); corrected-side spans are
// recomputed from span widths, and the corrected sentence is the result of
// applying the edits. Throws DataError with 1-based line numbers.
std::vector<EditSet> parse_edit_file(std::istream& in);
std::vector<EditSet> parse_edit_file(const std::string& path);

}  // namespace feceval
