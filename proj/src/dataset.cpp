#include "feceval/dataset.hpp"

#include <cctype>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "feceval/error.hpp"

namespace feceval {

namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string required_string(const nlohmann::json& record, const char* field,
                            long line_no) {
  if (!record.contains(field)) {
    throw DataError("dataset line " + std::to_string(line_no) +
                    ": missing required field '" + field + "'");
  }
  if (!record[field].is_string()) {
    throw DataError("dataset line " + std::to_string(line_no) + ": field '" +
                    field + "' must be a string");
  }
  return record[field].get<std::string>();
}

std::optional<std::string> optional_string(const nlohmann::json& record,
                                           const char* field, long line_no) {
  if (!record.contains(field)) return std::nullopt;
  if (!record[field].is_string()) {
    throw DataError("dataset line " + std::to_string(line_no) + ": field '" +
                    field + "' must be a string");
  }
  return record[field].get<std::string>();
}

}  // namespace

std::vector<DatasetItem> parse_dataset(std::istream& in) {
  std::vector<DatasetItem> items;
  std::set<std::string> seen;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw DataError("dataset line " + std::to_string(line_no) +
                      ": malformed JSON object");
    }
    DatasetItem item;
    item.id = required_string(record, "id", line_no);
    item.dialogue = required_string(record, "dialogue", line_no);
    item.original = required_string(record, "original", line_no);
    item.reference = required_string(record, "reference", line_no);
    item.hypothesis = optional_string(record, "hypothesis", line_no);
    item.system = optional_string(record, "system", line_no);
    item.corpus = optional_string(record, "corpus", line_no);
    if (!seen.insert(item.id).second) {
      throw DataError("dataset line " + std::to_string(line_no) +
                      ": duplicate id '" + item.id + "'");
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<DatasetItem> parse_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file: " + path);
  return parse_dataset(in);
}

}  // namespace feceval
