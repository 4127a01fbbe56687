#include "feceval/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "feceval/classify.hpp"

namespace feceval {

namespace {

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

nlohmann::ordered_json triple_json(const CategoryCounts& counts,
                                   const ScoreTriple& triple) {
  nlohmann::ordered_json entry;
  entry["tp"] = counts.tp;
  entry["fp"] = counts.fp;
  entry["fn"] = counts.fn;
  if (triple.defined) {
    entry["p"] = triple.precision;
    entry["r"] = triple.recall;
    entry["f"] = triple.f;
  } else {
    entry["p"] = nullptr;
    entry["r"] = nullptr;
    entry["f"] = nullptr;
  }
  return entry;
}

void append_tsv_row(std::string& out, const std::string& category,
                    const CategoryCounts& counts, const ScoreTriple& triple) {
  out += category;
  out += '\t';
  out += std::to_string(counts.tp);
  out += '\t';
  out += std::to_string(counts.fp);
  out += '\t';
  out += std::to_string(counts.fn);
  if (triple.defined) {
    out += '\t';
    out += format_percent(triple.precision);
    out += '\t';
    out += format_percent(triple.recall);
    out += '\t';
    out += format_percent(triple.f);
  } else {
    out += "\t-\t-\t-";
  }
  out += '\n';
}

CategoryCounts counts_for(const ScoreReport& report, const std::string& key) {
  const auto it = report.categories.find(key);
  return it == report.categories.end() ? CategoryCounts{} : it->second;
}

}  // namespace

const char* to_string(OutputFormat format) {
  return format == OutputFormat::Json ? "json" : "tsv";
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "tsv") return OutputFormat::Tsv;
  return std::nullopt;
}

std::string format_percent(double fraction) {
  return format_fixed(100.0 * fraction, 2);
}

std::string report_to_json(const ScoreReport& report) {
  nlohmann::ordered_json doc;
  doc["axis"] = to_string(report.axis);
  doc["beta"] = report.beta;
  nlohmann::ordered_json categories = nlohmann::ordered_json::object();
  for (const std::string& key : axis_categories(report.axis)) {
    const CategoryCounts counts = counts_for(report, key);
    categories[key] = triple_json(counts, f_beta(counts, report.beta));
  }
  doc["categories"] = categories;
  doc["total"] = triple_json(report.total, report.total_triple());
  return doc.dump(2) + "\n";
}

std::string report_to_tsv(const ScoreReport& report) {
  std::string out = "category\ttp\tfp\tfn\tp\tr\tf\n";
  for (const std::string& key : axis_categories(report.axis)) {
    if (report.axis == Axis::Total) break;  // only the Total row below
    const CategoryCounts counts = counts_for(report, key);
    append_tsv_row(out, key, counts, f_beta(counts, report.beta));
  }
  append_tsv_row(out, "Total", report.total, report.total_triple());
  return out;
}

std::string render_report(const ScoreReport& report, OutputFormat format) {
  return format == OutputFormat::Json ? report_to_json(report)
                                      : report_to_tsv(report);
}

std::string stats_to_json(const std::vector<CorpusStats>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const CorpusStats& row : rows) {
    nlohmann::ordered_json entry;
    entry["corpus"] = row.corpus;
    entry["system"] = row.system;
    entry["items"] = row.items;
    entry["items_with_errors"] = row.items_with_errors;
    entry["error_rate"] = row.error_rate;
    auto set_optional = [&entry](const char* key,
                                 const std::optional<double>& value) {
      if (value) {
        entry[key] = *value;
      } else {
        entry[key] = nullptr;
      }
    };
    set_optional("avg_len_original", row.avg_len_original);
    set_optional("avg_len_reference", row.avg_len_reference);
    set_optional("avg_len_corrected", row.avg_len_corrected);
    set_optional("bleu_origin_vs_reference", row.bleu_origin_vs_reference);
    set_optional("bleu_origin_vs_corrected", row.bleu_origin_vs_corrected);
    nlohmann::ordered_json distribution = nlohmann::ordered_json::object();
    for (int i = 0; i < kContentCodeCount; ++i) {
      const ContentCode code = static_cast<ContentCode>(i);
      const auto hit = row.category_distribution.find(code);
      distribution[to_string(code)] =
          hit == row.category_distribution.end() ? 0.0 : hit->second;
    }
    entry["category_distribution"] = distribution;
    doc.push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string stats_to_tsv(const std::vector<CorpusStats>& rows) {
  std::string out =
      "corpus\tsystem\titems\titems_with_errors\terror_rate"
      "\tavg_len_original\tavg_len_reference\tavg_len_corrected"
      "\tbleu_origin_vs_reference\tbleu_origin_vs_corrected";
  for (int i = 0; i < kContentCodeCount; ++i) {
    out += "\tdist:";
    out += to_string(static_cast<ContentCode>(i));
  }
  out += '\n';
  for (const CorpusStats& row : rows) {
    out += row.corpus.empty() ? "-" : row.corpus;
    out += '\t';
    out += row.system.empty() ? "-" : row.system;
    out += '\t';
    out += std::to_string(row.items);
    out += '\t';
    out += std::to_string(row.items_with_errors);
    out += '\t';
    out += format_fixed(row.error_rate, 2);
    auto append_optional = [&out](const std::optional<double>& value,
                                  int decimals) {
      out += '\t';
      out += value ? format_fixed(*value, decimals) : "-";
    };
    append_optional(row.avg_len_original, 2);
    append_optional(row.avg_len_reference, 2);
    append_optional(row.avg_len_corrected, 2);
    append_optional(row.bleu_origin_vs_reference, 4);
    append_optional(row.bleu_origin_vs_corrected, 4);
    for (int i = 0; i < kContentCodeCount; ++i) {
      const ContentCode code = static_cast<ContentCode>(i);
      const auto hit = row.category_distribution.find(code);
      out += '\t';
      out += format_fixed(
          hit == row.category_distribution.end() ? 0.0 : hit->second, 4);
    }
    out += '\n';
  }
  return out;
}

std::string render_stats(const std::vector<CorpusStats>& rows,
                         OutputFormat format) {
  return format == OutputFormat::Json ? stats_to_json(rows)
                                      : stats_to_tsv(rows);
}

}  // namespace feceval
