#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "feceval/text.hpp"

namespace feceval {

// Parses the CoNLL-U subset used for annotation transport. Each sentence
// block starts with `# id = <id>`, followed by token lines with at least the
// six tab-separated columns ID FORM LEMMA UPOS XPOS FEATS (ID is 1-based;
// trailing dependency columns are accepted and ignored) and ends with a blank
// line or EOF. Lemmas are lowercased on ingest; `_` means absent for LEMMA /
// XPOS / FEATS. Throws DataError with 1-based line numbers.
std::vector<AnnotatedSentence> parse_conllu(std::istream& in);
std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path);

// Inverse of parse_conllu; parse(serialize(x)) == x for valid sentences.
std::string serialize_conllu(const std::vector<AnnotatedSentence>& sentences);

}  // namespace feceval
