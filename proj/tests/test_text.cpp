#include <sstream>

#include <gtest/gtest.h>

#include "feceval/annotate.hpp"
#include "feceval/conllu.hpp"
#include "feceval/dataset.hpp"
#include "feceval/error.hpp"
#include "feceval/text.hpp"
#include "support.hpp"

using namespace feceval;

TEST(Upos, RoundTripsAllTags) {
  const char* tags[] = {"ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET",
                        "INTJ", "NOUN", "NUM", "PART", "PRON", "PROPN",
                        "PUNCT", "SCONJ", "SYM", "VERB", "X"};
  for (const char* tag : tags) {
    const auto parsed = parse_upos(tag);
    ASSERT_TRUE(parsed.has_value()) << tag;
    EXPECT_STREQ(to_string(*parsed), tag);
  }
  EXPECT_FALSE(parse_upos("NOUNS").has_value());
  EXPECT_FALSE(parse_upos("noun").has_value());
}

TEST(Dataset, ParsesMinimalRecordAndSkipsBlankLines) {
  std::istringstream in(
      "\n"
      R"({"id":"d1","dialogue":"A: hi","original":"Ola is late.","reference":"Ola is early."})"
      "\n"
      "   \n"
      R"({"id":"d2","dialogue":"B: yo","original":"x","reference":"x","hypothesis":"y","system":"s1","corpus":"samsum"})"
      "\n");
  const auto items = parse_dataset(in);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].id, "d1");
  EXPECT_EQ(items[0].original, "Ola is late.");
  EXPECT_FALSE(items[0].hypothesis.has_value());
  EXPECT_EQ(items[1].hypothesis.value(), "y");
  EXPECT_EQ(items[1].system.value(), "s1");
  EXPECT_EQ(items[1].corpus.value(), "samsum");
}

TEST(Dataset, RejectsNonStringIdNamingLineOne) {
  std::istringstream in(R"({"id":1})");
  try {
    parse_dataset(in);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("id"), std::string::npos);
  }
}

TEST(Dataset, RejectsMissingFieldMalformedJsonAndDuplicateIds) {
  std::istringstream missing(R"({"id":"a","dialogue":"d","original":"o"})");
  EXPECT_THROW(parse_dataset(missing), DataError);

  std::istringstream malformed("{not json}");
  EXPECT_THROW(parse_dataset(malformed), DataError);

  std::istringstream duplicate(
      R"({"id":"a","dialogue":"d","original":"o","reference":"r"})"
      "\n"
      R"({"id":"a","dialogue":"d","original":"o","reference":"r"})"
      "\n");
  EXPECT_THROW(parse_dataset(duplicate), DataError);
}

namespace {

const char* kTwoTokenBlock =
    "# id = s1.orig\n"
    "1\tOla\tola\tPROPN\t_\t_\n"
    "2\tleft\tleave\tVERB\tVBD\tTense=Past\n"
    "\n";

}  // namespace

TEST(Conllu, ParsesTokensCommentsAndFeats) {
  std::istringstream in(kTwoTokenBlock);
  const auto sentences = parse_conllu(in);
  ASSERT_EQ(sentences.size(), 1u);
  const AnnotatedSentence& s = sentences[0];
  EXPECT_EQ(s.id, "s1.orig");
  ASSERT_EQ(s.tokens.size(), 2u);
  EXPECT_EQ(s.tokens[0].index, 0);
  EXPECT_EQ(s.tokens[0].surface, "Ola");
  EXPECT_EQ(s.tokens[0].lemma, "ola");
  EXPECT_EQ(s.tokens[0].upos, Upos::PROPN);
  EXPECT_TRUE(s.tokens[0].xpos.empty());
  EXPECT_TRUE(s.tokens[0].feats.empty());
  EXPECT_EQ(s.tokens[1].xpos, "VBD");
  ASSERT_EQ(s.tokens[1].feats.count("Tense"), 1u);
  EXPECT_EQ(s.tokens[1].feats.at("Tense"), "Past");
}

TEST(Conllu, LowercasesLemmaOnIngest) {
  std::istringstream in(
      "# id = x\n"
      "1\tOla\tOLA\tPROPN\t_\t_\n"
      "\n");
  const auto sentences = parse_conllu(in);
  EXPECT_EQ(sentences[0].tokens[0].lemma, "ola");
}

TEST(Conllu, AcceptsAndIgnoresDependencyColumns) {
  std::istringstream in(
      "# id = x\n"
      "1\tOla\tola\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tleft\tleave\tVERB\t_\t_\t0\troot\t_\t_\n"
      "\n");
  const auto sentences = parse_conllu(in);
  ASSERT_EQ(sentences[0].tokens.size(), 2u);
}

TEST(Conllu, ReportsErrorsWithLineNumbers) {
  auto expect_error_on_line = [](const char* text, const char* needle,
                                 const char* line_marker) {
    std::istringstream in(text);
    try {
      parse_conllu(in);
      FAIL() << "expected DataError for: " << text;
    } catch (const DataError& e) {
      const std::string what = e.what();
      EXPECT_NE(what.find(needle), std::string::npos) << what;
      EXPECT_NE(what.find(line_marker), std::string::npos) << what;
    }
  };
  expect_error_on_line("# id = x\n1\tOla\tola\tNOUNS\t_\t_\n", "UPOS",
                       "line 2");
  expect_error_on_line("# id = x\nq\tOla\tola\tNOUN\t_\t_\n", "non-integer",
                       "line 2");
  expect_error_on_line("# id = x\n1\tOla\tola\tNOUN\t_\n", "columns",
                       "line 2");
  expect_error_on_line("# id = x\n2\tOla\tola\tNOUN\t_\t_\n", "consecutive",
                       "line 2");
  expect_error_on_line("1\tOla\tola\tNOUN\t_\t_\n", "id", "line 1");
}

TEST(Conllu, EmptySentenceIsPreserved) {
  std::istringstream in("# id = empty\n\n");
  const auto sentences = parse_conllu(in);
  ASSERT_EQ(sentences.size(), 1u);
  EXPECT_EQ(sentences[0].id, "empty");
  EXPECT_TRUE(sentences[0].tokens.empty());
}

TEST(Conllu, SerializesSingleTokenSentenceAsThreeLines) {
  AnnotatedSentence s = testsupport::sentence("one", {{"Hi", "hi", Upos::INTJ}});
  const std::string text = serialize_conllu({s});
  EXPECT_EQ(text, "# id = one\n1\tHi\thi\tINTJ\t_\t_\n\n");
  EXPECT_EQ(serialize_conllu({}), "");
}

TEST(Conllu, SerializeParseRoundTripsRandomSentences) {
  std::mt19937 rng(20240817);
  std::vector<AnnotatedSentence> batch;
  for (int i = 0; i < 200; ++i) {
    AnnotatedSentence s =
        testsupport::random_sentence(rng, "s" + std::to_string(i));
    // sprinkle optional columns
    for (auto& token : s.tokens) {
      if (rng() % 3 == 0) token.xpos = "T" + std::to_string(rng() % 5);
      if (rng() % 4 == 0) token.feats["Num"] = rng() % 2 ? "Sing" : "Plur";
      if (rng() % 5 == 0) token.feats["Case"] = "Nom";
    }
    batch.push_back(std::move(s));
  }
  std::istringstream in(serialize_conllu(batch));
  const auto parsed = parse_conllu(in);
  ASSERT_EQ(parsed.size(), batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    EXPECT_EQ(parsed[i], batch[i]) << "sentence " << i;
  }
}

TEST(Tokenize, SplitsPunctuationButKeepsContractionsAndNumbers) {
  EXPECT_EQ(tokenize("Ola will be late."),
            (std::vector<std::string>{"Ola", "will", "be", "late", "."}));
  EXPECT_EQ(tokenize("He won't come!"),
            (std::vector<std::string>{"He", "won't", "come", "!"}));
  EXPECT_EQ(tokenize("Dinner at 8:30, right?"),
            (std::vector<std::string>{"Dinner", "at", "8:30", ",", "right",
                                      "?"}));
  EXPECT_EQ(tokenize("  spaced\tout \n"),
            (std::vector<std::string>{"spaced", "out"}));
  EXPECT_EQ(tokenize(""), (std::vector<std::string>{}));
}

TEST(NumericLiteral, AcceptsDigitGroupsOnly) {
  EXPECT_TRUE(is_numeric_literal("15"));
  EXPECT_TRUE(is_numeric_literal("8:30"));
  EXPECT_TRUE(is_numeric_literal("1,000"));
  EXPECT_TRUE(is_numeric_literal("3.5"));
  EXPECT_FALSE(is_numeric_literal("8:"));
  EXPECT_FALSE(is_numeric_literal("a1"));
  EXPECT_FALSE(is_numeric_literal("15th"));
  EXPECT_FALSE(is_numeric_literal(""));
}

TEST(HeuristicAnnotate, MatchesPinnedGoldenSentence) {
  const AnnotatedSentence s = heuristic_annotate("Ola will be late.", "g");
  ASSERT_EQ(s.tokens.size(), 5u);
  const char* surfaces[] = {"Ola", "will", "be", "late", "."};
  const char* lemmas[] = {"ola", "will", "be", "late", "."};
  const Upos tags[] = {Upos::PROPN, Upos::AUX, Upos::AUX, Upos::NOUN,
                       Upos::PUNCT};
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(s.tokens[i].surface, surfaces[i]) << i;
    EXPECT_EQ(s.tokens[i].lemma, lemmas[i]) << i;
    EXPECT_EQ(s.tokens[i].upos, tags[i]) << i;
    EXPECT_EQ(s.tokens[i].index, i);
  }
}

TEST(HeuristicAnnotate, CoversLexiconsNumbersAndSuffixes) {
  const AnnotatedSentence s =
      heuristic_annotate("She quickly lent them 15 keys during meetings.", "g");
  const std::vector<std::pair<std::string, Upos>> expected = {
      {"She", Upos::PRON},     {"quickly", Upos::NOUN},
      {"lent", Upos::NOUN},    {"them", Upos::PRON},
      {"15", Upos::NUM},       {"keys", Upos::NOUN},
      {"during", Upos::ADP},   {"meetings", Upos::NOUN},
      {".", Upos::PUNCT},
  };
  ASSERT_EQ(s.tokens.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(s.tokens[i].surface, expected[i].first) << i;
    EXPECT_EQ(s.tokens[i].upos, expected[i].second) << i;
  }
  EXPECT_EQ(s.tokens[2].lemma, "lend");
  EXPECT_EQ(s.tokens[5].lemma, "key");
  EXPECT_EQ(s.tokens[7].lemma, "meeting");
}

TEST(HeuristicAnnotate, EmptyTextYieldsEmptySentence) {
  EXPECT_TRUE(heuristic_annotate("", "e").tokens.empty());
  EXPECT_TRUE(heuristic_annotate("   \t ", "e").tokens.empty());
}

TEST(HeuristicAnnotate, IsDeterministicAndIdempotentOnItsOwnOutput) {
  const std::vector<std::string> texts = {
      "Tom can't make it to the 8:30 meeting, he said so.",
      "Derek and Phil will come.",
      "Ann was proud of her 2 children!",
      "No, they won't stay -- maybe later.",
  };
  for (const std::string& text : texts) {
    const AnnotatedSentence first = heuristic_annotate(text, "t");
    const AnnotatedSentence second = heuristic_annotate(text, "t");
    EXPECT_EQ(first, second);
    const std::string detokenized = join_tokens(surfaces(first));
    const AnnotatedSentence again = heuristic_annotate(detokenized, "t");
    EXPECT_EQ(surfaces(again), surfaces(first)) << text;
  }
}

TEST(Validate, RejectsBrokenInvariants) {
  AnnotatedSentence bad_index =
      testsupport::sentence("s", {{"a", "a", Upos::NOUN}});
  bad_index.tokens[0].index = 3;
  EXPECT_THROW(validate(bad_index), ContractError);

  AnnotatedSentence bad_lemma =
      testsupport::sentence("s", {{"a", "A", Upos::NOUN}});
  EXPECT_THROW(validate(bad_lemma), ContractError);

  AnnotatedSentence spaced = testsupport::sentence("s", {{"a", "a", Upos::NOUN}});
  spaced.tokens[0].surface = "a b";
  EXPECT_THROW(validate(spaced), ContractError);

  EXPECT_NO_THROW(validate(testsupport::sentence("ok", {})));
}
