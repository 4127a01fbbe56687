#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feceval {

// Universal Dependencies coarse part-of-speech tags.
enum class Upos {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM,
  PART, PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X,
};

const char* to_string(Upos upos);
std::optional<Upos> parse_upos(std::string_view text);

struct AnnotatedToken {
  int index = 0;
  std::string surface;                       // never empty, never contains whitespace
  std::string lemma;                         // lowercased canonical form
  Upos upos = Upos::X;
  std::string xpos;                          // fine-grained tag, empty when absent
  std::map<std::string, std::string> feats;  // morphological key=value pairs

  bool operator==(const AnnotatedToken&) const = default;
};

struct AnnotatedSentence {
  std::string id;
  std::vector<AnnotatedToken> tokens;  // indices consecutive from 0; may be empty

  bool operator==(const AnnotatedSentence&) const = default;
};

struct DatasetItem {
  std::string id;
  std::string dialogue;
  std::string original;
  std::string reference;
  std::optional<std::string> hypothesis;
  std::optional<std::string> system;
  std::optional<std::string> corpus;

  bool operator==(const DatasetItem&) const = default;
};

// Throws ContractError when a token or the index sequence violates the
// invariants above.
void validate(const AnnotatedSentence& sentence);

std::vector<std::string> surfaces(const AnnotatedSentence& sentence);

std::string ascii_lower(std::string_view text);

}  // namespace feceval
