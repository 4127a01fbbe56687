#include "feceval/text.hpp"

#include <array>
#include <cctype>

#include "feceval/error.hpp"

namespace feceval {

namespace {

constexpr std::array<const char*, 17> kUposNames = {
    "ADJ",  "ADP",  "ADV",   "AUX",   "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM",  "VERB", "X",
};

}  // namespace

const char* to_string(Upos upos) {
  return kUposNames[static_cast<int>(upos)];
}

std::optional<Upos> parse_upos(std::string_view text) {
  for (std::size_t i = 0; i < kUposNames.size(); ++i) {
    if (text == kUposNames[i]) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

void validate(const AnnotatedSentence& sentence) {
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const AnnotatedToken& token = sentence.tokens[i];
    if (token.index != static_cast<int>(i)) {
      throw ContractError("sentence '" + sentence.id + "': token index " +
                          std::to_string(token.index) + " at position " +
                          std::to_string(i) + " is not consecutive");
    }
    if (token.surface.empty()) {
      throw ContractError("sentence '" + sentence.id + "': empty surface at " +
                          std::to_string(i));
    }
    for (char c : token.surface) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw ContractError("sentence '" + sentence.id +
                            "': surface contains whitespace at " +
                            std::to_string(i));
      }
    }
    if (token.lemma != ascii_lower(token.lemma)) {
      throw ContractError("sentence '" + sentence.id +
                          "': lemma not lowercase at " + std::to_string(i));
    }
  }
}

std::vector<std::string> surfaces(const AnnotatedSentence& sentence) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const AnnotatedToken& token : sentence.tokens) out.push_back(token.surface);
  return out;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace feceval
