#pragma once

#include <stdexcept>
#include <string>

namespace gfs {

// Malformed or out-of-range input (empty parameter list, n = 0 where n >= 1
// is required, src == dst, ...).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed but falls outside the regime where the
// underlying identity holds, e.g. split indices with a base equal to 1.
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The BFS oracle refused an instance whose state space exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input (plan files, graph specs, --pq flags) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gfs
