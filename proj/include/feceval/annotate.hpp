#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "feceval/text.hpp"

namespace feceval {

// Splits raw text into surface tokens: whitespace separates, punctuation
// characters become single-character tokens, contractions stay whole
// ("won't" is one token) and digit groups keep internal . , : separators
// ("8:30" is one token).
std::vector<std::string> tokenize(std::string_view text);

// Deterministic test-grade annotator: tokenize() plus lexicon-driven lemmas
// (irregular forms, -s/-ed/-ing stripping) and UPOS from closed lexicons,
// with NUM for numeric literals, PUNCT for punctuation, PROPN for capitalized
// tokens not covered by a lexicon, NOUN otherwise. Intended as an explicit
// opt-in fallback when no external annotations are available.
AnnotatedSentence heuristic_annotate(std::string_view text, std::string id = "");

bool is_numeric_literal(std::string_view surface);
bool is_punctuation(std::string_view surface);

}  // namespace feceval
