#include "feceval/conllu.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "feceval/error.hpp"

namespace feceval {

namespace {

constexpr const char* kIdPrefix = "# id = ";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> columns;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      columns.push_back(line.substr(start));
      return columns;
    }
    columns.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

[[noreturn]] void fail(long line_no, const std::string& what) {
  throw DataError("annotations line " + std::to_string(line_no) + ": " + what);
}

std::map<std::string, std::string> parse_feats(const std::string& column,
                                               long line_no) {
  std::map<std::string, std::string> feats;
  std::stringstream in(column);
  std::string pair;
  while (std::getline(in, pair, '|')) {
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(line_no, "malformed FEATS entry '" + pair + "'");
    }
    feats[pair.substr(0, eq)] = pair.substr(eq + 1);
  }
  return feats;
}

}  // namespace

std::vector<AnnotatedSentence> parse_conllu(std::istream& in) {
  std::vector<AnnotatedSentence> sentences;
  AnnotatedSentence current;
  bool open = false;
  std::string line;
  long line_no = 0;

  auto finish = [&] {
    if (!open) return;
    sentences.push_back(std::move(current));
    current = AnnotatedSentence{};
    open = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish();
      continue;
    }
    if (line[0] == '#') {
      if (line.rfind(kIdPrefix, 0) == 0) {
        if (open && !current.tokens.empty()) {
          fail(line_no, "id comment inside sentence '" + current.id + "'");
        }
        if (open) fail(line_no, "duplicate id comment");
        current.id = line.substr(std::string(kIdPrefix).size());
        open = true;
      }
      continue;
    }

    if (!open) fail(line_no, "token line before any '# id =' comment");
    const std::vector<std::string> columns = split_tabs(line);
    if (columns.size() < 6) {
      fail(line_no, "expected at least 6 tab-separated columns, got " +
                        std::to_string(columns.size()));
    }

    AnnotatedToken token;
    bool digits_only = !columns[0].empty();
    for (char c : columns[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) digits_only = false;
    }
    if (!digits_only || columns[0].size() > 9) {
      fail(line_no, "non-integer ID column '" + columns[0] + "'");
    }
    token.index = std::stoi(columns[0]) - 1;
    if (token.index != static_cast<int>(current.tokens.size())) {
      fail(line_no, "ID column " + columns[0] + " is not consecutive");
    }
    token.surface = columns[1];
    if (token.surface.empty() || token.surface == "_") {
      fail(line_no, "empty FORM column");
    }
    for (char c : token.surface) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        fail(line_no, "FORM contains whitespace");
      }
    }
    token.lemma =
        ascii_lower(columns[2] == "_" ? token.surface : columns[2]);
    const std::optional<Upos> upos = parse_upos(columns[3]);
    if (!upos) fail(line_no, "unknown UPOS tag '" + columns[3] + "'");
    token.upos = *upos;
    if (columns[4] != "_") token.xpos = columns[4];
    if (columns[5] != "_") token.feats = parse_feats(columns[5], line_no);
    current.tokens.push_back(std::move(token));
  }
  finish();
  return sentences;
}

std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open annotations file: " + path);
  return parse_conllu(in);
}

std::string serialize_conllu(const std::vector<AnnotatedSentence>& sentences) {
  std::string out;
  for (const AnnotatedSentence& sentence : sentences) {
    validate(sentence);
    out += kIdPrefix;
    out += sentence.id;
    out += '\n';
    for (const AnnotatedToken& token : sentence.tokens) {
      out += std::to_string(token.index + 1);
      out += '\t';
      out += token.surface;
      out += '\t';
      out += token.lemma;
      out += '\t';
      out += to_string(token.upos);
      out += '\t';
      out += token.xpos.empty() ? "_" : token.xpos;
      out += '\t';
      if (token.feats.empty()) {
        out += '_';
      } else {
        bool first = true;
        for (const auto& [key, value] : token.feats) {
          if (!first) out += '|';
          out += key;
          out += '=';
          out += value;
          first = false;
        }
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace feceval
