#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidlcs/catalog.hpp"
#include "braidlcs/nq.hpp"

namespace braidlcs {

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;  ///< "<suite>.<item>", the sort key of a report
  std::string description;
  std::string expected;
  std::string computed;
  bool passed = false;
  double elapsed_seconds = 0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;  ///< sorted by name

  bool passed() const;
};

struct SuiteParams {
  std::size_t max_class = 4;
  catalog::Pr4Reading reading = catalog::Pr4Reading::OddOrLarge;
  NqOptions nq;
  /// Suite-specific overrides: n, g, m for the surface suites, k and c for
  /// witt, m for dihedral.
  std::map<std::string, long> values;
};

/// theorem1, theorem2, theorem3 (alias b2t2), artin, witt, dihedral, pure,
/// all.
std::vector<std::string> suite_names();

/// Throws UnknownSuite for a name not in suite_names(). Engine errors
/// (ResourceLimitExceeded) propagate.
SuiteReport run_suite(std::string const& name, SuiteParams const& params = {});

/// {"suite", "status", "checks": [{name, description, expected, computed,
/// status}]}; with timing, a trailing "elapsed_seconds" object keyed by
/// check name. Without timing the output is a pure function of the inputs.
std::string to_json(SuiteReport const& r, bool timing = false);

/// One "PASS name: description (expected ..., computed ...)" line per check
/// and a summary line.
std::string to_text(SuiteReport const& r);

}  // namespace braidlcs
