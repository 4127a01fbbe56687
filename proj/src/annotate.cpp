#include "feceval/annotate.hpp"

#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace feceval {

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;  // keep multi-byte UTF-8 sequences whole
}

bool is_digit(unsigned char c) { return std::isdigit(c); }

const std::unordered_set<std::string>& pronoun_lexicon() {
  static const std::unordered_set<std::string> words = {
      "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself",
      "yourselves", "he", "him", "his", "himself", "she", "her", "hers",
      "herself", "it", "its", "itself", "we", "us", "our", "ours",
      "ourselves", "they", "them", "their", "theirs", "themselves", "who",
      "whom", "whose", "what", "which", "this", "that", "these", "those",
      "something", "anything", "nothing", "everything", "someone", "anyone",
      "everyone", "somebody", "anybody", "nobody", "everybody", "none",
  };
  return words;
}

const std::unordered_set<std::string>& aux_lexicon() {
  static const std::unordered_set<std::string> words = {
      "will", "would", "can", "could", "may", "might", "must", "shall",
      "should", "am", "is", "are", "was", "were", "be", "been", "being",
      "do", "does", "did", "have", "has", "had", "cannot", "won't",
      "wouldn't", "can't", "couldn't", "mightn't", "mustn't", "shan't",
      "shouldn't", "ain't", "isn't", "aren't", "wasn't", "weren't", "don't",
      "doesn't", "didn't", "haven't", "hasn't", "hadn't",
  };
  return words;
}

const std::unordered_set<std::string>& cconj_lexicon() {
  static const std::unordered_set<std::string> words = {
      "and", "or", "but", "nor", "neither",
  };
  return words;
}

const std::unordered_set<std::string>& sconj_lexicon() {
  static const std::unordered_set<std::string> words = {
      "because", "although", "though", "while", "if", "unless", "since",
      "whereas", "whether", "so",
  };
  return words;
}

const std::unordered_set<std::string>& adp_lexicon() {
  static const std::unordered_set<std::string> words = {
      "in", "on", "at", "by", "with", "from", "to", "of", "for", "about",
      "after", "before", "during", "over", "under", "into", "onto",
      "between", "among", "through", "against", "without", "within", "near",
      "off", "across", "along", "around", "behind", "beyond", "despite",
      "except", "inside", "outside", "toward", "towards", "upon", "via",
      "until", "till",
  };
  return words;
}

const std::unordered_set<std::string>& det_lexicon() {
  static const std::unordered_set<std::string> words = {
      "the", "a", "an", "some", "any", "each", "every", "either", "no",
      "another", "other", "both", "all", "most", "many", "few", "several",
      "such",
  };
  return words;
}

const std::unordered_set<std::string>& part_lexicon() {
  static const std::unordered_set<std::string> words = {"not"};
  return words;
}

const std::unordered_set<std::string>& adv_lexicon() {
  static const std::unordered_set<std::string> words = {
      "never", "also", "very", "too", "quite", "really", "always", "often",
      "sometimes", "usually", "again", "still", "just", "now", "then",
      "here", "there", "soon", "already", "yesterday", "today", "tomorrow",
      "maybe", "perhaps", "probably", "later",
  };
  return words;
}

const std::unordered_map<std::string, std::string>& irregular_lemmas() {
  static const std::unordered_map<std::string, std::string> lemmas = {
      {"is", "be"},        {"was", "be"},      {"are", "be"},
      {"were", "be"},      {"am", "be"},       {"been", "be"},
      {"being", "be"},     {"has", "have"},    {"had", "have"},
      {"having", "have"},  {"does", "do"},     {"did", "do"},
      {"doing", "do"},     {"done", "do"},     {"went", "go"},
      {"gone", "go"},      {"goes", "go"},     {"going", "go"},
      {"said", "say"},     {"says", "say"},    {"saying", "say"},
      {"made", "make"},    {"makes", "make"},  {"making", "make"},
      {"got", "get"},      {"gets", "get"},    {"gotten", "get"},
      {"getting", "get"},  {"gave", "give"},   {"given", "give"},
      {"gives", "give"},   {"giving", "give"}, {"took", "take"},
      {"taken", "take"},   {"takes", "take"},  {"taking", "take"},
      {"came", "come"},    {"comes", "come"},  {"coming", "come"},
      {"saw", "see"},      {"seen", "see"},    {"sees", "see"},
      {"seeing", "see"},   {"knew", "know"},   {"known", "know"},
      {"knows", "know"},   {"thought", "think"}, {"thinks", "think"},
      {"told", "tell"},    {"tells", "tell"},  {"telling", "tell"},
      {"left", "leave"},   {"leaves", "leave"}, {"leaving", "leave"},
      {"bought", "buy"},   {"buys", "buy"},    {"buying", "buy"},
      {"brought", "bring"}, {"brings", "bring"}, {"found", "find"},
      {"finds", "find"},   {"finding", "find"}, {"lent", "lend"},
      {"met", "meet"},     {"meets", "meet"},  {"meeting", "meet"},
      {"men", "man"},      {"women", "woman"}, {"children", "child"},
      {"feet", "foot"},    {"teeth", "tooth"}, {"better", "good"},
      {"best", "good"},    {"worse", "bad"},   {"worst", "bad"},
  };
  return lemmas;
}

bool all_alpha(std::string_view word) {
  if (word.empty()) return false;
  for (unsigned char c : word) {
    if (!std::isalpha(c)) return false;
  }
  return true;
}

bool in_any_lexicon(const std::string& lower) {
  return pronoun_lexicon().count(lower) || aux_lexicon().count(lower) ||
         cconj_lexicon().count(lower) || sconj_lexicon().count(lower) ||
         adp_lexicon().count(lower) || det_lexicon().count(lower) ||
         part_lexicon().count(lower) || adv_lexicon().count(lower);
}

std::string lemma_of(const std::string& surface) {
  const std::string lower = ascii_lower(surface);
  const auto irregular = irregular_lemmas().find(lower);
  if (irregular != irregular_lemmas().end()) return irregular->second;
  if (in_any_lexicon(lower) || !all_alpha(lower)) return lower;
  if (lower.size() >= 6 && lower.ends_with("ing")) {
    return lower.substr(0, lower.size() - 3);
  }
  if (lower.size() >= 4 && lower.ends_with("ed")) {
    return lower.substr(0, lower.size() - 2);
  }
  if (lower.size() >= 3 && lower.ends_with("s") && !lower.ends_with("ss")) {
    return lower.substr(0, lower.size() - 1);
  }
  return lower;
}

Upos upos_of(const std::string& surface) {
  if (is_punctuation(surface)) return Upos::PUNCT;
  if (is_numeric_literal(surface)) return Upos::NUM;
  const std::string lower = ascii_lower(surface);
  if (pronoun_lexicon().count(lower)) return Upos::PRON;
  if (aux_lexicon().count(lower)) return Upos::AUX;
  if (cconj_lexicon().count(lower)) return Upos::CCONJ;
  if (sconj_lexicon().count(lower)) return Upos::SCONJ;
  if (adp_lexicon().count(lower)) return Upos::ADP;
  if (det_lexicon().count(lower)) return Upos::DET;
  if (part_lexicon().count(lower)) return Upos::PART;
  if (adv_lexicon().count(lower)) return Upos::ADV;
  if (surface[0] >= 'A' && surface[0] <= 'Z') return Upos::PROPN;
  return Upos::NOUN;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (!is_word_byte(c)) {
      tokens.emplace_back(1, text[i]);
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n) {
      const unsigned char cur = text[i];
      if (is_word_byte(cur)) {
        ++i;
        continue;
      }
      // Keep contractions ("won't") and digit separators ("8:30", "3.5")
      // inside one token.
      const bool apostrophe = cur == '\'';
      const bool digit_sep = (cur == '.' || cur == ',' || cur == ':') &&
                             is_digit(text[i - 1]);
      if ((apostrophe || digit_sep) && i + 1 < n &&
          is_word_byte(static_cast<unsigned char>(text[i + 1])) &&
          (!digit_sep || is_digit(static_cast<unsigned char>(text[i + 1])))) {
        i += 2;
        continue;
      }
      break;
    }
    tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

bool is_numeric_literal(std::string_view surface) {
  if (surface.empty() || !is_digit(surface[0])) return false;
  bool prev_digit = true;
  for (std::size_t i = 1; i < surface.size(); ++i) {
    const unsigned char c = surface[i];
    if (is_digit(c)) {
      prev_digit = true;
    } else if ((c == '.' || c == ',' || c == ':') && prev_digit &&
               i + 1 < surface.size()) {
      prev_digit = false;
    } else {
      return false;
    }
  }
  return prev_digit;
}

bool is_punctuation(std::string_view surface) {
  if (surface.empty()) return false;
  for (unsigned char c : surface) {
    if (is_word_byte(c) || std::isspace(c)) return false;
  }
  return true;
}

AnnotatedSentence heuristic_annotate(std::string_view text, std::string id) {
  AnnotatedSentence sentence;
  sentence.id = std::move(id);
  const std::vector<std::string> words = tokenize(text);
  sentence.tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    AnnotatedToken token;
    token.index = static_cast<int>(i);
    token.surface = words[i];
    token.lemma = lemma_of(words[i]);
    token.upos = upos_of(words[i]);
    sentence.tokens.push_back(std::move(token));
  }
  return sentence;
}

}  // namespace feceval
