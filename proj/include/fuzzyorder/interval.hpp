#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzyorder/scalar.hpp"

namespace fzo {

/// Closed interval [lo, hi] over the reals with exact endpoints. Degenerate
/// intervals (lo == hi) represent real numbers.
class Interval {
 public:
  Interval(Scalar lo, Scalar hi);
  explicit Interval(Scalar point) : lo_(point), hi_(std::move(point)) {}

  /// Parses `[p/q, r/s]`; a single `[a]` is the degenerate interval.
  static Interval parse(std::string_view text);

  const Scalar& lo() const { return lo_; }
  const Scalar& hi() const { return hi_; }
  Scalar width() const { return hi_ - lo_; }
  bool degenerate() const { return lo_ == hi_; }
  bool contains(const Scalar& x) const { return lo_ <= x && x <= hi_; }

  std::string str() const;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.str(); }

 private:
  Scalar lo_;
  Scalar hi_;
};

/// Kulisch-Miranker partial order: componentwise comparison of endpoints.
bool km_leq(const Interval& a, const Interval& b);
/// km_leq(a, b) and a != b.
bool km_less(const Interval& a, const Interval& b);
/// a ⊆ b.
bool subseteq(const Interval& a, const Interval& b);
/// a ⋐ b: b contains a with both endpoint inequalities strict.
bool strictly_contained(const Interval& a, const Interval& b);

enum class Ordering { less, equal, greater };

inline Ordering reverse(Ordering o) {
  return o == Ordering::less ? Ordering::greater : (o == Ordering::greater ? Ordering::less : o);
}
const char* symbol(Ordering o);
Ordering compare_scalars(const Scalar& a, const Scalar& b);

/// Admissible total orders on intervals. Each refines km_leq.
enum class IntervalOrderKind {
  lex1,     ///< lower endpoint first, then upper
  lex2,     ///< upper endpoint first, then lower
  xu_yager  ///< sum of endpoints first, then width
};

std::string_view to_string(IntervalOrderKind kind);
/// Accepts `lex1`, `lex2`, `xy` (also `xu-yager`, `xuyager`).
std::optional<IntervalOrderKind> parse_interval_order(std::string_view tag);

Ordering total_compare(IntervalOrderKind kind, const Interval& a, const Interval& b);

using IntervalComparator = std::function<Ordering(const Interval&, const Interval&)>;

struct Violation {
  std::string property;
  std::string detail;
};

/// Outcome of a property harness: how many checks ran and every
/// counterexample found, with its inputs serialized.
struct PropertyReport {
  std::string subject;
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string property, std::string detail) {
    violations.push_back({std::move(property), std::move(detail)});
  }
};

/// Checks totality, antisymmetry, transitivity and refinement of km_leq over
/// the sampled pairs. Triples are formed from consecutive pairs.
PropertyReport check_admissible_interval(const IntervalComparator& order,
                                         const std::vector<std::pair<Interval, Interval>>& samples,
                                         std::string subject = "interval order");
PropertyReport check_admissible_interval(IntervalOrderKind kind,
                                         const std::vector<std::pair<Interval, Interval>>& samples);

}  // namespace fzo
