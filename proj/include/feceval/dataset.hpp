#pragma once

#include <iosfwd>
#include <vector>

#include "feceval/text.hpp"

namespace feceval {

// Reads one JSON object per line; blank lines are skipped. Required string
// fields: id, dialogue, original, reference. Optional string fields:
// hypothesis, system, corpus. Throws DataError naming the line and field on
// malformed input and on duplicate ids.
std::vector<DatasetItem> parse_dataset(std::istream& in);
std::vector<DatasetItem> parse_dataset_file(const std::string& path);

}  // namespace feceval
