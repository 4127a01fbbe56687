#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "feceval/error.hpp"
#include "feceval/pipeline.hpp"

namespace {

using feceval::RunConfig;

void add_annotator_options(CLI::App* cmd, RunConfig& config,
                           std::string& annotator) {
  cmd->add_option("--annotations", config.annotations_path,
                  "CoNLL-U annotations with <id>.orig/.ref/.hyp sentences");
  cmd->add_option("--annotator", annotator,
                  "Annotation source: external (default) or builtin")
      ->check(CLI::IsMember({"external", "builtin"}));
}

void add_report_options(CLI::App* cmd, RunConfig& config, std::string& axis,
                        std::string& format) {
  cmd->add_option("--axis", axis, "Report axis: form, content, combined, total")
      ->check(CLI::IsMember({"form", "content", "combined", "total"}));
  cmd->add_option("--beta", config.beta, "F-score beta (default 0.5)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", format, "Output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
}

void finalize_config(RunConfig& config, const std::string& annotator,
                     const std::string& axis, const std::string& format,
                     const std::string& side) {
  config.annotator = annotator == "builtin" ? feceval::AnnotatorKind::Builtin
                                            : feceval::AnnotatorKind::External;
  config.axis = *feceval::parse_axis(axis);
  config.format = *feceval::parse_output_format(format);
  config.side = side == "hyp" ? feceval::Field::Hypothesis
                              : feceval::Field::Reference;
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Evaluates factual error corrections of dialogue summaries: extracts "
      "token-level edits, classifies them, and scores hypothesis corrections "
      "against references."};
  app.require_subcommand(1);

  RunConfig config;
  std::string annotator = "external";
  std::string axis = "form";
  std::string format = "json";
  std::string side = "ref";
  std::string out_path;

  CLI::App* extract =
      app.add_subcommand("extract", "Extract and classify correction edits");
  extract->add_option("--data", config.dataset_path, "Dataset JSONL")
      ->required();
  add_annotator_options(extract, config, annotator);
  extract->add_option("--side", side,
                      "Corrected side to extract against: ref or hyp")
      ->check(CLI::IsMember({"ref", "hyp"}));
  extract->add_flag_callback(
      "--no-classify", [&config] { config.classify_edits = false; },
      "Write NA instead of content codes");
  extract->add_option("--jobs", config.jobs, "Worker threads");
  extract->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* compare =
      app.add_subcommand("compare", "Score hypothesis edits against reference edits");
  compare->add_option("--hyp", config.hyp_edits_path, "Hypothesis edit file")
      ->required();
  compare->add_option("--ref", config.ref_edits_path, "Reference edit file")
      ->required();
  add_report_options(compare, config, axis, format);
  compare->add_option("--jobs", config.jobs, "Worker threads");
  compare->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Extract from a dataset and score in one pass");
  evaluate->add_option("--data", config.dataset_path, "Dataset JSONL")
      ->required();
  add_annotator_options(evaluate, config, annotator);
  add_report_options(evaluate, config, axis, format);
  evaluate->add_option("--jobs", config.jobs, "Worker threads");
  evaluate->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* stats =
      app.add_subcommand("stats", "Corpus summaries per corpus and system");
  stats->add_option("--data", config.dataset_path, "Dataset JSONL")
      ->required();
  add_annotator_options(stats, config, annotator);
  stats->add_option("--format", format, "Output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  stats->add_option("--jobs", config.jobs, "Worker threads");
  stats->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  finalize_config(config, annotator, axis, format, side);

  try {
    std::string output;
    if (extract->parsed()) {
      output = feceval::run_extract(config);
    } else if (compare->parsed()) {
      output = feceval::run_compare(config);
    } else if (evaluate->parsed()) {
      output = feceval::run_evaluate(config);
    } else {
      output = feceval::run_stats(config);
    }
    return write_output(output, out_path);
  } catch (const feceval::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const feceval::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
