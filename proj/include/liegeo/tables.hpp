#pragma once

#include <string>

namespace liegeo {

/// Classification-table harness: builds each expectation row's witness,
/// analyzes it, and compares rank spectrum, maximal singular dimensions,
/// diameter, strongness, symp thickness class and the row's k-lacunarity.
/// Rows whose left neighbour is also witnessed additionally check the
/// point-residual fingerprint against the left cell and its (k-1)-lacunarity.
/// Rows without a desk-scale witness are reported SKIPPED with their reason.
struct TableOutcome {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::string log;
  bool ok() const { return failed == 0; }
};

TableOutcome verify_tables(const std::string& data_path,
                           const std::string& filter = "",
                           bool include_stretch = false);

/// Default location of the bundled expectation data, resolved relative to
/// the executable's source tree layout or the LIEGEO_DATA env variable.
std::string default_expectations_path();

}  // namespace liegeo
