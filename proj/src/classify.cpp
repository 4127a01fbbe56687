#include "feceval/classify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "feceval/annotate.hpp"
#include "feceval/error.hpp"

namespace feceval {

namespace {

constexpr std::array<const char*, kContentCodeCount> kContentNames = {
    "Ent:ObjE",  "Ent:AttrE", "Pred:ModE", "Pred:TensE", "Pred:NegE",
    "Pred:VerbE", "CircE",    "CorefE",    "LinkE",      "NumE",
    "OthE",
};

constexpr std::array<const char*, kContentCodeCount> kShortNames = {
    "Ent:Obj",  "Ent:Attr", "Pred:Mod", "Pred:Tens", "Pred:Neg",
    "Pred:Verb", "Circ",    "Coref",    "Link",      "Num",
    "Oth",
};

using TokenSpan = std::vector<const AnnotatedToken*>;

TokenSpan span_tokens(const AnnotatedSentence& sentence, int start, int end) {
  if (start < 0 || end > static_cast<int>(sentence.tokens.size()) ||
      start > end) {
    throw ContractError("edit span [" + std::to_string(start) + ", " +
                        std::to_string(end) + ") outside sentence '" +
                        sentence.id + "'");
  }
  TokenSpan span;
  for (int i = start; i < end; ++i) span.push_back(&sentence.tokens[i]);
  return span;
}

bool is_negation_word(const std::string& lower) {
  static const std::set<std::string> lexicon = {
      "not", "n't", "never", "no", "none", "neither", "nor", "cannot",
  };
  if (lexicon.count(lower)) return true;
  return lower.size() > 3 && lower.ends_with("n't");
}

std::string joined_lower(const TokenSpan& span) {
  std::string out;
  for (std::size_t i = 0; i < span.size(); ++i) {
    if (i > 0) out += ' ';
    out += ascii_lower(span[i]->surface);
  }
  return out;
}

bool negation_detector(const TokenSpan& o, const TokenSpan& c) {
  std::set<std::string> o_words, c_words;
  for (const auto* token : o) o_words.insert(ascii_lower(token->surface));
  for (const auto* token : c) c_words.insert(ascii_lower(token->surface));
  for (const auto& word : o_words) {
    if (!c_words.count(word) && is_negation_word(word)) return true;
  }
  for (const auto& word : c_words) {
    if (!o_words.count(word) && is_negation_word(word)) return true;
  }
  const std::string o_joined = joined_lower(o), c_joined = joined_lower(c);
  return o_joined == c_joined + "n't" || c_joined == o_joined + "n't";
}

bool numeric_token(const AnnotatedToken& token) {
  return token.upos == Upos::NUM || is_numeric_literal(token.surface);
}

bool number_detector(const TokenSpan& all) {
  bool any = false;
  for (const auto* token : all) {
    if (token->upos == Upos::PUNCT) continue;
    if (!numeric_token(*token)) return false;
    any = true;
  }
  return any;
}

bool is_modal_lemma(const std::string& lemma) {
  static const std::set<std::string> modals = {
      "can", "could", "may", "might", "must", "shall", "should", "will",
      "would",
  };
  return modals.count(lemma) > 0;
}

bool modality_detector(const TokenSpan& o, const TokenSpan& c) {
  std::set<std::string> o_modals, c_modals;
  bool rest_verbal = true;
  for (const auto* token : o) {
    if (is_modal_lemma(token->lemma)) {
      o_modals.insert(token->lemma);
    } else if (token->upos != Upos::AUX && token->upos != Upos::VERB) {
      rest_verbal = false;
    }
  }
  for (const auto* token : c) {
    if (is_modal_lemma(token->lemma)) {
      c_modals.insert(token->lemma);
    } else if (token->upos != Upos::AUX && token->upos != Upos::VERB) {
      rest_verbal = false;
    }
  }
  if (o_modals.empty() && c_modals.empty()) return false;
  return o_modals != c_modals && rest_verbal;
}

bool tense_detector(const Edit& edit, const TokenSpan& o, const TokenSpan& c) {
  if (edit.form() != FormCode::R) return false;
  std::multiset<std::string> o_lemmas, c_lemmas;
  for (const auto* token : o) {
    if (token->upos != Upos::VERB && token->upos != Upos::AUX) return false;
    o_lemmas.insert(token->lemma);
  }
  for (const auto* token : c) {
    if (token->upos != Upos::VERB && token->upos != Upos::AUX) return false;
    c_lemmas.insert(token->lemma);
  }
  if (o_lemmas != c_lemmas) return false;
  auto joined = [](const TokenSpan& span) {
    std::string out;
    for (const auto* token : span) {
      out += token->surface;
      out += ' ';
    }
    return out;
  };
  return joined(o) != joined(c);
}

bool coref_detector(const TokenSpan& all) {
  bool any_pron = false;
  for (const auto* token : all) {
    if (token->upos == Upos::PRON) {
      any_pron = true;
    } else if (token->upos != Upos::NOUN && token->upos != Upos::PROPN &&
               token->upos != Upos::DET) {
      return false;
    }
  }
  return any_pron;
}

std::optional<ContentCode> dominant_category(const TokenSpan& all) {
  std::map<Upos, int> counts;
  for (const auto* token : all) {
    if (token->upos != Upos::PUNCT) ++counts[token->upos];
  }
  if (counts.empty()) return std::nullopt;
  int best = 0;
  for (const auto& [tag, count] : counts) best = std::max(best, count);

  auto category_of = [](Upos tag) -> std::optional<ContentCode> {
    switch (tag) {
      case Upos::NOUN:
      case Upos::PROPN: return ContentCode::EntObj;
      case Upos::ADJ: return ContentCode::EntAttr;
      case Upos::VERB:
      case Upos::AUX: return ContentCode::PredVerb;
      case Upos::ADV:
      case Upos::ADP: return ContentCode::Circ;
      case Upos::CCONJ:
      case Upos::SCONJ: return ContentCode::Link;
      default: return std::nullopt;
    }
  };

  // Tied tags resolve to the category listed first in the content table.
  std::optional<ContentCode> resolved;
  for (const auto& [tag, count] : counts) {
    if (count != best) continue;
    const std::optional<ContentCode> category = category_of(tag);
    if (!category) continue;
    if (!resolved || static_cast<int>(*category) < static_cast<int>(*resolved)) {
      resolved = category;
    }
  }
  return resolved;
}

bool begins_with_adp(const TokenSpan& span) {
  return !span.empty() && span.front()->upos == Upos::ADP;
}

}  // namespace

const char* to_string(ContentCode code) {
  return kContentNames[static_cast<int>(code)];
}

std::optional<ContentCode> parse_content_code(std::string_view text) {
  for (int i = 0; i < kContentCodeCount; ++i) {
    if (text == kContentNames[i]) return static_cast<ContentCode>(i);
  }
  return std::nullopt;
}

const char* short_code(ContentCode code) {
  return kShortNames[static_cast<int>(code)];
}

std::string combined_code(FormCode form, ContentCode code) {
  return std::string(to_string(form)) + ":" + short_code(code);
}

ContentCode classify(const Edit& edit, const AnnotatedSentence& original,
                     const AnnotatedSentence& corrected, DetectorMask enabled) {
  const TokenSpan o = span_tokens(original, edit.o_start, edit.o_end);
  const TokenSpan c = span_tokens(corrected, edit.c_start, edit.c_end);
  TokenSpan all = o;
  all.insert(all.end(), c.begin(), c.end());
  if (all.empty()) {
    throw ContractError("edit with two empty spans in sentence '" +
                        original.id + "'");
  }

  auto on = [&](Detector detector) {
    return enabled.test(static_cast<std::size_t>(detector));
  };

  if (on(Detector::PredNeg) && negation_detector(o, c)) {
    return ContentCode::PredNeg;
  }
  if (on(Detector::Num) && number_detector(all)) return ContentCode::Num;
  if (on(Detector::PredMod) && modality_detector(o, c)) {
    return ContentCode::PredMod;
  }
  if (on(Detector::PredTens) && tense_detector(edit, o, c)) {
    return ContentCode::PredTens;
  }
  if (on(Detector::Coref) && coref_detector(all)) return ContentCode::Coref;

  const std::optional<ContentCode> dominant = dominant_category(all);
  if (on(Detector::Link) && dominant == ContentCode::Link) {
    return ContentCode::Link;
  }
  if (on(Detector::EntObj) && dominant == ContentCode::EntObj) {
    return ContentCode::EntObj;
  }
  if (on(Detector::EntAttr) && dominant == ContentCode::EntAttr) {
    return ContentCode::EntAttr;
  }
  if (on(Detector::PredVerb) && dominant == ContentCode::PredVerb) {
    return ContentCode::PredVerb;
  }
  if (on(Detector::Circ) &&
      (dominant == ContentCode::Circ || begins_with_adp(o) ||
       begins_with_adp(c))) {
    return ContentCode::Circ;
  }
  return ContentCode::Oth;
}

EditSet classify_all(EditSet set) {
  for (Edit& edit : set.edits) {
    edit.content = classify(edit, set.original, set.corrected);
  }
  return set;
}

}  // namespace feceval
