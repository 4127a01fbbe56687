#pragma once

#include <string>
#include <vector>

#include "feceval/score.hpp"
#include "feceval/stats.hpp"

namespace feceval {

enum class OutputFormat { Json, Tsv };

const char* to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view text);

// {"axis": ..., "beta": ..., "categories": {code: {tp,fp,fn,p,r,f}}, "total":
// {...}}; p/r/f are fractions in [0,1], null when the triple is undefined.
// Categories appear in the fixed axis order.
std::string report_to_json(const ScoreReport& report);

// One row per category plus Total; P/R/F as percentages with two decimals,
// "-" for undefined triples.
std::string report_to_tsv(const ScoreReport& report);

std::string render_report(const ScoreReport& report, OutputFormat format);

std::string stats_to_json(const std::vector<CorpusStats>& rows);
std::string stats_to_tsv(const std::vector<CorpusStats>& rows);
std::string render_stats(const std::vector<CorpusStats>& rows,
                         OutputFormat format);

// "12.34" style fixed two-decimal percentage of a fraction in [0,1].
std::string format_percent(double fraction);

}  // namespace feceval
