#pragma once

#include <cstddef>

#include "fuzzyorder/interval.hpp"
#include "fuzzyorder/oracle_kit.hpp"
#include "fuzzyorder/selector.hpp"

namespace fzo {

struct HarnessOptions {
  std::size_t n = 10000;  ///< triples, KY pairs and no-extremes probes each
  oracle::GeneratorConfig corpus;
  unsigned threads = 0;   ///< 0 picks the hardware concurrency
  std::size_t max_reported = 25;  ///< violations kept verbatim; the rest are counted
};

struct FuzzyPropertyReport : PropertyReport {
  std::size_t suppressed = 0;  ///< violations beyond max_reported
  std::size_t total_violations() const { return violations.size() + suppressed; }
};

/// Property harness for a total order on fuzzy numbers: totality,
/// antisymmetry and transitivity on n random triples, refinement of the
/// Klir-Yuan order on n constructed pairs, and f-1 < f < f+1 for n random f.
///
/// The corpus is cut into fixed chunks with their own seeds, so the report
/// does not depend on the thread count. Throws std::invalid_argument for
/// partial orders.
FuzzyPropertyReport check_admissible_fuzzy(const FuzzyOrder& order, const HarnessOptions& options);

}  // namespace fzo
