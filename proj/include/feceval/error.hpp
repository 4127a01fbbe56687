#pragma once

#include <stdexcept>
#include <string>

namespace feceval {

// Problem in user-supplied data (malformed files, unresolvable ids, ...).
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A caller broke an operation's contract (overlapping edits, mismatched
// originals, empty corpus, ...). Also exit code 2 at the CLI boundary.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace feceval
