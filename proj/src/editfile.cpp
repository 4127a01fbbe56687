#include "feceval/editfile.hpp"

#include <cctype>
#include <fstream>

#include "feceval/classify.hpp"
#include "feceval/error.hpp"

namespace feceval {

namespace {

constexpr const char* kIdPrefix = "# id = ";
constexpr const char* kSeparator = "|||";

[[noreturn]] void fail(long line_no, const std::string& what) {
  throw DataError("edit file line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = text.find(kSeparator, start);
    if (sep == std::string::npos) {
      fields.push_back(text.substr(start));
      return fields;
    }
    fields.push_back(text.substr(start, sep - start));
    start = sep + 3;
  }
}

AnnotatedSentence sentence_from_surfaces(std::string id,
                                         const std::vector<std::string>& words) {
  AnnotatedSentence sentence;
  sentence.id = std::move(id);
  for (std::size_t i = 0; i < words.size(); ++i) {
    AnnotatedToken token;
    token.index = static_cast<int>(i);
    token.surface = words[i];
    token.lemma = ascii_lower(words[i]);
    token.upos = Upos::X;
    sentence.tokens.push_back(std::move(token));
  }
  return sentence;
}

std::vector<std::string> split_spaces(const std::string& text) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t space = text.find(' ', start);
    if (space == std::string::npos) {
      words.push_back(text.substr(start));
      break;
    }
    if (space > start) words.push_back(text.substr(start, space - start));
    start = space + 1;
  }
  return words;
}

long parse_span_index(const std::string& text, long line_no) {
  if (text.empty()) fail(line_no, "empty span offset");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(line_no, "span offset '" + text + "' is not a number");
    }
  }
  if (text.size() > 9) fail(line_no, "span offset '" + text + "' out of range");
  return std::stol(text);
}

int count_correction_tokens(const std::string& correction) {
  if (correction.empty()) return 0;
  int count = 1;
  for (char c : correction) {
    if (c == ' ') ++count;
  }
  return count;
}

}  // namespace

std::string write_edit_file(const std::vector<EditSet>& sets) {
  std::string out;
  for (const EditSet& set : sets) {
    out += kIdPrefix;
    out += set.id;
    out += '\n';
    out += 'S';
    for (const AnnotatedToken& token : set.original.tokens) {
      out += ' ';
      out += token.surface;
    }
    out += '\n';
    for (const Edit& edit : set.edits) {
      out += "A ";
      out += std::to_string(edit.o_start);
      out += ' ';
      out += std::to_string(edit.o_end);
      out += kSeparator;
      out += to_string(edit.form());
      out += ':';
      out += edit.content ? to_string(*edit.content) : "NA";
      out += kSeparator;
      out += edit.correction;
      out += kSeparator;
      out += "REQUIRED";
      out += kSeparator;
      out += "-NONE-";
      out += kSeparator;
      out += '0';
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

std::vector<EditSet> parse_edit_file(std::istream& in) {
  std::vector<EditSet> sets;
  std::string id;
  bool have_id = false;
  bool have_sentence = false;
  EditSet current;
  int c_cursor_drift = 0;
  long line_no = 0;

  auto finish = [&](long at_line) {
    if (!have_id) return;
    if (!have_sentence) fail(at_line, "block '" + id + "' has no S line");
    current.id = id;
    current.corrected = sentence_from_surfaces(
        id, apply_edits(current.original, current.edits));
    sets.push_back(std::move(current));
    current = EditSet{};
    have_id = have_sentence = false;
    c_cursor_drift = 0;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish(line_no);
      continue;
    }
    if (line.rfind(kIdPrefix, 0) == 0) {
      if (have_id) fail(line_no, "block '" + id + "' is missing its blank line");
      id = line.substr(std::string(kIdPrefix).size());
      have_id = true;
      continue;
    }
    if (line[0] == 'S' && (line.size() == 1 || line[1] == ' ')) {
      if (!have_id) fail(line_no, "S line before any '# id =' comment");
      if (have_sentence) fail(line_no, "duplicate S line in block '" + id + "'");
      current.original = sentence_from_surfaces(
          id, split_spaces(line.size() > 1 ? line.substr(2) : ""));
      have_sentence = true;
      continue;
    }
    if (line.rfind("A ", 0) == 0) {
      if (!have_sentence) fail(line_no, "A line before its S line");
      const std::vector<std::string> fields = split_fields(line.substr(2));
      if (fields.size() != 6) {
        fail(line_no, "expected 6 '|||'-separated fields, got " +
                          std::to_string(fields.size()));
      }
      const std::size_t space = fields[0].find(' ');
      if (space == std::string::npos) {
        fail(line_no, "span must be '<start> <end>'");
      }
      Edit edit;
      edit.o_start = static_cast<int>(
          parse_span_index(fields[0].substr(0, space), line_no));
      edit.o_end = static_cast<int>(
          parse_span_index(fields[0].substr(space + 1), line_no));
      const int sentence_length =
          static_cast<int>(current.original.tokens.size());
      if (edit.o_start > edit.o_end || edit.o_end > sentence_length) {
        fail(line_no, "span [" + std::to_string(edit.o_start) + ", " +
                          std::to_string(edit.o_end) +
                          ") does not fit the S line");
      }
      if (!current.edits.empty() &&
          edit.o_start < current.edits.back().o_end) {
        fail(line_no, "edit spans overlap at " + std::to_string(edit.o_start));
      }

      const std::string& label = fields[1];
      const std::size_t colon = label.find(':');
      if (colon == std::string::npos) {
        fail(line_no, "edit label '" + label + "' is not FORM:CONTENT");
      }
      const std::optional<FormCode> form = parse_form_code(label.substr(0, colon));
      if (!form) fail(line_no, "unknown form code in '" + label + "'");
      const std::string content_text = label.substr(colon + 1);
      if (content_text != "NA") {
        const std::optional<ContentCode> content =
            parse_content_code(content_text);
        if (!content) {
          fail(line_no, "unknown content code '" + content_text + "'");
        }
        edit.content = content;
      }

      edit.correction = fields[2] == "-NONE-" ? "" : fields[2];
      const int correction_tokens = count_correction_tokens(edit.correction);
      edit.c_start = edit.o_start + c_cursor_drift;
      edit.c_end = edit.c_start + correction_tokens;
      c_cursor_drift += correction_tokens - (edit.o_end - edit.o_start);

      if (*form != edit.form()) {
        fail(line_no, "form code " + std::string(to_string(*form)) +
                          " does not match the span/correction shape");
      }
      current.edits.push_back(std::move(edit));
      continue;
    }
    fail(line_no, "unrecognized line");
  }
  finish(line_no + 1);
  return sets;
}

std::vector<EditSet> parse_edit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edit file: " + path);
  return parse_edit_file(in);
}

}  // namespace feceval
