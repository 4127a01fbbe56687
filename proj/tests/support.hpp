// Shared test fixtures: token factories, sentence-pair generators, and the
// brute-force alignment oracle. Everything here is independent of the
// library's alignment/search internals so it can serve as a cross-check.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "feceval/align.hpp"
#include "feceval/text.hpp"

namespace testsupport {

inline feceval::AnnotatedToken token(int index, std::string surface,
                                     std::string lemma, feceval::Upos upos) {
  feceval::AnnotatedToken t;
  t.index = index;
  t.surface = std::move(surface);
  t.lemma = std::move(lemma);
  t.upos = upos;
  return t;
}

inline feceval::AnnotatedSentence sentence(
    std::string id,
    std::vector<std::tuple<std::string, std::string, feceval::Upos>> words) {
  feceval::AnnotatedSentence s;
  s.id = std::move(id);
  int index = 0;
  for (auto& [surface, lemma, upos] : words) {
    s.tokens.push_back(token(index++, surface, lemma, upos));
  }
  return s;
}

inline feceval::AnnotatedSentence reindexed(feceval::AnnotatedSentence s) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    s.tokens[i].index = static_cast<int>(i);
  }
  return s;
}

// --- independent oracles -------------------------------------------------

// Recursive longest-common-subsequence, memo-free; fine for short surfaces.
inline int lcs_recursive(const std::string& a, const std::string& b,
                         std::size_t i, std::size_t j) {
  if (i == a.size() || j == b.size()) return 0;
  if (a[i] == b[j]) return 1 + lcs_recursive(a, b, i + 1, j + 1);
  return std::max(lcs_recursive(a, b, i + 1, j), lcs_recursive(a, b, i, j + 1));
}

inline double lcs_ratio(const std::string& a, const std::string& b) {
  const std::string la = feceval::ascii_lower(a);
  const std::string lb = feceval::ascii_lower(b);
  return 2.0 * lcs_recursive(la, lb, 0, 0) /
         static_cast<double>(la.size() + lb.size());
}

// Exhaustive minimal-cost search over every monotone alignment. `memo`
// bounds the blow-up for the big sweeps; passing use_memo = false explores
// the full tree, which is feasible for short pairs.
class AlignmentOracle {
 public:
  AlignmentOracle(const feceval::AnnotatedSentence& original,
                  const feceval::AnnotatedSentence& corrected, bool use_memo)
      : o_(original.tokens), c_(corrected.tokens), use_memo_(use_memo) {}

  double minimal_cost() { return search(0, 0); }

 private:
  double search(std::size_t i, std::size_t j) {
    if (i == o_.size() && j == c_.size()) return 0.0;
    if (use_memo_) {
      const auto hit = memo_.find({i, j});
      if (hit != memo_.end()) return hit->second;
    }
    double best = 1e18;
    if (i < o_.size() && j < c_.size()) {
      best = std::min(best,
                      feceval::sub_cost(o_[i], c_[j]) + search(i + 1, j + 1));
    }
    if (i + 1 < o_.size() && j + 1 < c_.size() &&
        feceval::ascii_lower(o_[i].surface) ==
            feceval::ascii_lower(c_[j + 1].surface) &&
        feceval::ascii_lower(o_[i + 1].surface) ==
            feceval::ascii_lower(c_[j].surface)) {
      best = std::min(best, 1.0 + search(i + 2, j + 2));
    }
    if (i < o_.size()) best = std::min(best, 1.0 + search(i + 1, j));
    if (j < c_.size()) best = std::min(best, 1.0 + search(i, j + 1));
    if (use_memo_) memo_[{i, j}] = best;
    return best;
  }

  const std::vector<feceval::AnnotatedToken>& o_;
  const std::vector<feceval::AnnotatedToken>& c_;
  bool use_memo_;
  std::map<std::pair<std::size_t, std::size_t>, double> memo_;
};

inline double path_cost(const feceval::AnnotatedSentence& original,
                        const feceval::AnnotatedSentence& corrected,
                        const std::vector<feceval::AlignmentOp>& path) {
  double cost = 0.0;
  for (const feceval::AlignmentOp& op : path) {
    switch (op.kind) {
      case feceval::OpKind::Match:
        break;
      case feceval::OpKind::Substitute:
        cost += feceval::sub_cost(original.tokens[op.o_begin],
                                  corrected.tokens[op.c_begin]);
        break;
      case feceval::OpKind::Insert:
      case feceval::OpKind::Delete:
      case feceval::OpKind::Transpose:
        cost += 1.0;
        break;
    }
  }
  return cost;
}

// --- randomized sentence pairs -------------------------------------------

struct VocabEntry {
  const char* surface;
  const char* lemma;
  feceval::Upos upos;
};

inline const std::vector<VocabEntry>& mutation_vocabulary() {
  using feceval::Upos;
  static const std::vector<VocabEntry> vocab = {
      {"Derek", "derek", Upos::PROPN},  {"Laura", "laura", Upos::PROPN},
      {"Ann", "ann", Upos::PROPN},      {"mother", "mother", Upos::NOUN},
      {"dinner", "dinner", Upos::NOUN}, {"keys", "key", Upos::NOUN},
      {"is", "be", Upos::AUX},          {"was", "be", Upos::AUX},
      {"will", "will", Upos::AUX},      {"won't", "won't", Upos::AUX},
      {"may", "may", Upos::AUX},        {"lent", "lend", Upos::VERB},
      {"gave", "give", Upos::VERB},     {"comes", "come", Upos::VERB},
      {"left", "leave", Upos::VERB},    {"happy", "happy", Upos::ADJ},
      {"proud", "proud", Upos::ADJ},    {"late", "late", Upos::ADJ},
      {"she", "she", Upos::PRON},       {"her", "her", Upos::PRON},
      {"they", "they", Upos::PRON},     {"the", "the", Upos::DET},
      {"a", "a", Upos::DET},            {"and", "and", Upos::CCONJ},
      {"but", "but", Upos::CCONJ},      {"because", "because", Upos::SCONJ},
      {"after", "after", Upos::ADP},    {"during", "during", Upos::ADP},
      {"at", "at", Upos::ADP},          {"not", "not", Upos::PART},
      {"never", "never", Upos::ADV},    {"15", "15", Upos::NUM},
      {"30", "30", Upos::NUM},          {".", ".", Upos::PUNCT},
      {",", ",", Upos::PUNCT},
  };
  return vocab;
}

inline feceval::AnnotatedToken vocab_token(const VocabEntry& entry) {
  return token(0, entry.surface, entry.lemma, entry.upos);
}

inline feceval::AnnotatedSentence random_sentence(std::mt19937& rng,
                                                  std::string id,
                                                  int max_length = 12) {
  const auto& vocab = mutation_vocabulary();
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> word_dist(0, vocab.size() - 1);
  feceval::AnnotatedSentence s;
  s.id = std::move(id);
  const int length = length_dist(rng);
  for (int i = 0; i < length; ++i) {
    s.tokens.push_back(vocab_token(vocab[word_dist(rng)]));
  }
  return reindexed(std::move(s));
}

// Perturbs a copy of `base` with substitutions, insertions, deletions,
// adjacent swaps, and case flips.
inline feceval::AnnotatedSentence mutate_sentence(
    std::mt19937& rng, const feceval::AnnotatedSentence& base,
    std::string id) {
  const auto& vocab = mutation_vocabulary();
  std::uniform_int_distribution<std::size_t> word_dist(0, vocab.size() - 1);
  feceval::AnnotatedSentence out = base;
  out.id = std::move(id);
  std::uniform_int_distribution<int> count_dist(0, 4);
  const int mutations = count_dist(rng);
  for (int step = 0; step < mutations; ++step) {
    std::uniform_int_distribution<int> kind_dist(0, 4);
    const int kind = kind_dist(rng);
    std::uniform_int_distribution<std::size_t> pos_dist(
        0, out.tokens.empty() ? 0 : out.tokens.size() - 1);
    switch (kind) {
      case 0:  // substitute
        if (!out.tokens.empty()) {
          out.tokens[pos_dist(rng)] = vocab_token(vocab[word_dist(rng)]);
        }
        break;
      case 1:  // insert
        out.tokens.insert(
            out.tokens.begin() +
                static_cast<long>(out.tokens.empty() ? 0 : pos_dist(rng)),
            vocab_token(vocab[word_dist(rng)]));
        break;
      case 2:  // delete
        if (!out.tokens.empty()) {
          out.tokens.erase(out.tokens.begin() +
                           static_cast<long>(pos_dist(rng)));
        }
        break;
      case 3:  // swap adjacent
        if (out.tokens.size() >= 2) {
          const std::size_t pos =
              std::uniform_int_distribution<std::size_t>(
                  0, out.tokens.size() - 2)(rng);
          std::swap(out.tokens[pos], out.tokens[pos + 1]);
        }
        break;
      case 4:  // flip the case of the first letter
        if (!out.tokens.empty()) {
          std::string& surface = out.tokens[pos_dist(rng)].surface;
          char& first = surface[0];
          if (first >= 'a' && first <= 'z') {
            first = static_cast<char>(first - 'a' + 'A');
          } else if (first >= 'A' && first <= 'Z') {
            first = static_cast<char>(first - 'A' + 'a');
          }
        }
        break;
    }
  }
  return reindexed(std::move(out));
}

// --- shared file fixtures -------------------------------------------------

// Two items: d-1's hypothesis reproduces the reference deletion, d-2's
// hypothesis leaves the original (and its tense error) untouched.
inline const char* sample_dataset_jsonl() {
  return
      R"({"id": "d-1", "dialogue": "A: who comes?", "original": "Derek and Phil will come .", "reference": "Derek will come .", "hypothesis": "Derek will come ."})"
      "\n"
      R"({"id": "d-2", "dialogue": "A: when?", "original": "He is late .", "reference": "He was late .", "hypothesis": "He is late ."})"
      "\n";
}

inline const char* sample_annotations_conllu() {
  return
      "# id = d-1.orig\n"
      "1\tDerek\tderek\tPROPN\t_\t_\n"
      "2\tand\tand\tCCONJ\t_\t_\n"
      "3\tPhil\tphil\tPROPN\t_\t_\n"
      "4\twill\twill\tAUX\t_\t_\n"
      "5\tcome\tcome\tVERB\t_\t_\n"
      "6\t.\t.\tPUNCT\t_\t_\n"
      "\n"
      "# id = d-1.ref\n"
      "1\tDerek\tderek\tPROPN\t_\t_\n"
      "2\twill\twill\tAUX\t_\t_\n"
      "3\tcome\tcome\tVERB\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\n"
      "\n"
      "# id = d-1.hyp\n"
      "1\tDerek\tderek\tPROPN\t_\t_\n"
      "2\twill\twill\tAUX\t_\t_\n"
      "3\tcome\tcome\tVERB\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\n"
      "\n"
      "# id = d-2.orig\n"
      "1\tHe\the\tPRON\t_\t_\n"
      "2\tis\tbe\tAUX\t_\t_\n"
      "3\tlate\tlate\tADJ\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\n"
      "\n"
      "# id = d-2.ref\n"
      "1\tHe\the\tPRON\t_\t_\n"
      "2\twas\tbe\tAUX\t_\t_\n"
      "3\tlate\tlate\tADJ\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\n"
      "\n"
      "# id = d-2.hyp\n"
      "1\tHe\the\tPRON\t_\t_\n"
      "2\tis\tbe\tAUX\t_\t_\n"
      "3\tlate\tlate\tADJ\t_\t_\n"
      "4\t.\t.\tPUNCT\t_\t_\n"
      "\n";
}

}  // namespace testsupport
