#include "feceval/align.hpp"

#include <algorithm>
#include <cmath>

#include "feceval/error.hpp"

namespace feceval {

namespace {

constexpr double kCostEpsilon = 1e-9;

// Longest common subsequence length over bytes.
int lcs_length(const std::string& a, const std::string& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<int> row(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    int diagonal = 0;  // row[j-1] from the previous iteration of i
    for (std::size_t j = 1; j <= m; ++j) {
      const int above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1
                                    : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return row[m];
}

bool same_coarse_group(Upos a, Upos b) {
  auto verbal = [](Upos u) { return u == Upos::VERB || u == Upos::AUX; };
  auto nominal = [](Upos u) {
    return u == Upos::NOUN || u == Upos::PROPN || u == Upos::PRON;
  };
  return (verbal(a) && verbal(b)) || (nominal(a) && nominal(b));
}

double pos_cost(Upos a, Upos b) {
  if (a == b) return 0.0;
  if (same_coarse_group(a, b)) return 0.25;
  return 0.5;
}

double char_cost(const std::string& a, const std::string& b) {
  const std::string la = ascii_lower(a), lb = ascii_lower(b);
  const double similarity =
      2.0 * lcs_length(la, lb) / static_cast<double>(la.size() + lb.size());
  return 0.5 * (1.0 - similarity);
}

// DP transitions, in tie-break preference order.
enum class Step { MatchOrSub, Transpose, Delete, Insert, None };

}  // namespace

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Match: return "match";
    case OpKind::Substitute: return "substitute";
    case OpKind::Insert: return "insert";
    case OpKind::Delete: return "delete";
    case OpKind::Transpose: return "transpose";
  }
  return "?";
}

const char* to_string(FormCode form) {
  switch (form) {
    case FormCode::M: return "M";
    case FormCode::R: return "R";
    case FormCode::U: return "U";
  }
  return "?";
}

std::optional<FormCode> parse_form_code(std::string_view text) {
  if (text == "M") return FormCode::M;
  if (text == "R") return FormCode::R;
  if (text == "U") return FormCode::U;
  return std::nullopt;
}

double sub_cost(const AnnotatedToken& a, const AnnotatedToken& b) {
  if (a.surface == b.surface) return 0.0;
  const double lemma_cost = a.lemma == b.lemma ? 0.0 : 0.499;
  return lemma_cost + pos_cost(a.upos, b.upos) +
         char_cost(a.surface, b.surface);
}

std::vector<AlignmentOp> align(const AnnotatedSentence& original,
                               const AnnotatedSentence& corrected) {
  const auto& o = original.tokens;
  const auto& c = corrected.tokens;
  const std::size_t n = o.size(), m = c.size();

  std::vector<std::vector<double>> cost(n + 1, std::vector<double>(m + 1));
  std::vector<std::vector<Step>> step(n + 1, std::vector<Step>(m + 1, Step::None));
  for (std::size_t i = 1; i <= n; ++i) {
    cost[i][0] = static_cast<double>(i);
    step[i][0] = Step::Delete;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    cost[0][j] = static_cast<double>(j);
    step[0][j] = Step::Insert;
  }

  std::vector<std::vector<double>> sub(n, std::vector<double>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub[i][j] = sub_cost(o[i], c[j]);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      double best = cost[i - 1][j - 1] + sub[i - 1][j - 1];
      Step chosen = Step::MatchOrSub;
      auto offer = [&](double candidate, Step kind) {
        if (candidate < best - kCostEpsilon) {
          best = candidate;
          chosen = kind;
        }
      };
      if (i >= 2 && j >= 2 &&
          ascii_lower(o[i - 2].surface) == ascii_lower(c[j - 1].surface) &&
          ascii_lower(o[i - 1].surface) == ascii_lower(c[j - 2].surface)) {
        offer(cost[i - 2][j - 2] + 1.0, Step::Transpose);
      }
      offer(cost[i - 1][j] + 1.0, Step::Delete);
      offer(cost[i][j - 1] + 1.0, Step::Insert);
      cost[i][j] = best;
      step[i][j] = chosen;
    }
  }

  std::vector<AlignmentOp> path;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    AlignmentOp op;
    switch (step[i][j]) {
      case Step::MatchOrSub:
        op.kind = o[i - 1].surface == c[j - 1].surface ? OpKind::Match
                                                       : OpKind::Substitute;
        op.o_begin = static_cast<int>(i) - 1;
        op.o_end = static_cast<int>(i);
        op.c_begin = static_cast<int>(j) - 1;
        op.c_end = static_cast<int>(j);
        --i, --j;
        break;
      case Step::Transpose:
        op.kind = OpKind::Transpose;
        op.o_begin = static_cast<int>(i) - 2;
        op.o_end = static_cast<int>(i);
        op.c_begin = static_cast<int>(j) - 2;
        op.c_end = static_cast<int>(j);
        i -= 2, j -= 2;
        break;
      case Step::Delete:
        op.kind = OpKind::Delete;
        op.o_begin = static_cast<int>(i) - 1;
        op.o_end = static_cast<int>(i);
        op.c_begin = static_cast<int>(j);
        op.c_end = static_cast<int>(j);
        --i;
        break;
      case Step::Insert:
        op.kind = OpKind::Insert;
        op.o_begin = static_cast<int>(i);
        op.o_end = static_cast<int>(i);
        op.c_begin = static_cast<int>(j) - 1;
        op.c_end = static_cast<int>(j);
        --j;
        break;
      case Step::None:
        throw ContractError("alignment backtrace escaped the table");
    }
    path.push_back(op);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

EditSet extract_edits(const AnnotatedSentence& original,
                      const AnnotatedSentence& corrected,
                      const std::vector<AlignmentOp>& path) {
  EditSet set;
  set.id = original.id;
  set.original = original;
  set.corrected = corrected;

  int expect_o = 0, expect_c = 0;
  for (const AlignmentOp& op : path) {
    if (op.o_begin != expect_o || op.c_begin != expect_c) {
      throw ContractError("alignment path does not cover the sentence pair");
    }
    expect_o = op.o_end;
    expect_c = op.c_end;
  }
  if (expect_o != static_cast<int>(original.tokens.size()) ||
      expect_c != static_cast<int>(corrected.tokens.size())) {
    throw ContractError("alignment path does not cover the sentence pair");
  }

  std::size_t k = 0;
  while (k < path.size()) {
    if (path[k].kind == OpKind::Match) {
      ++k;
      continue;
    }
    Edit edit;
    edit.o_start = path[k].o_begin;
    edit.c_start = path[k].c_begin;
    while (k < path.size() && path[k].kind != OpKind::Match) {
      edit.o_end = path[k].o_end;
      edit.c_end = path[k].c_end;
      ++k;
    }
    std::vector<std::string> correction;
    for (int j = edit.c_start; j < edit.c_end; ++j) {
      correction.push_back(corrected.tokens[j].surface);
    }
    edit.correction = join_tokens(correction);
    set.edits.push_back(std::move(edit));
  }
  return set;
}

std::vector<std::string> apply_edits(const AnnotatedSentence& original,
                                     const std::vector<Edit>& edits) {
  const int n = static_cast<int>(original.tokens.size());
  std::vector<std::string> out;
  int cursor = 0;
  for (const Edit& edit : edits) {
    if (edit.o_start > edit.o_end || edit.o_start < 0 || edit.o_end > n) {
      throw ContractError("edit span [" + std::to_string(edit.o_start) + ", " +
                          std::to_string(edit.o_end) + ") out of bounds");
    }
    if (edit.o_start < cursor) {
      throw ContractError("edit spans overlap at " +
                          std::to_string(edit.o_start));
    }
    for (; cursor < edit.o_start; ++cursor) {
      out.push_back(original.tokens[cursor].surface);
    }
    if (!edit.correction.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t space = edit.correction.find(' ', start);
        if (space == std::string::npos) {
          out.push_back(edit.correction.substr(start));
          break;
        }
        out.push_back(edit.correction.substr(start, space - start));
        start = space + 1;
      }
    }
    cursor = edit.o_end;
  }
  for (; cursor < n; ++cursor) out.push_back(original.tokens[cursor].surface);
  return out;
}

}  // namespace feceval
