#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fuzzyorder/dense_sequence.hpp"
#include "fuzzyorder/fuzzy_number.hpp"
#include "fuzzyorder/interval.hpp"

namespace fzo {

enum class Relation { less, equal, greater, incomparable };

const char* symbol(Relation r);
Relation reverse(Relation r);
Relation to_relation(Ordering o);

/// Evidence that two fuzzy numbers are Klir-Yuan incomparable.
///
/// nested:   at `alpha` one cut lies properly inside the other (both
///           endpoint inequalities strict).
/// crossing: at `alpha` g's cut is KM-below f's, at `beta` f's cut is
///           KM-below g's.
struct KyWitness {
  enum class Case { nested, crossing };
  Case kind;
  Scalar alpha;
  Interval f_at_alpha;
  Interval g_at_alpha;
  std::optional<Scalar> beta;
  std::optional<Interval> f_at_beta;
  std::optional<Interval> g_at_beta;

  std::string str() const;
};

struct CompareResult {
  Relation relation;
  /// α where the decision was made: first differing sequence element for
  /// the total orders, a point of strict difference for the partial ones.
  std::optional<Scalar> alpha;
  /// Sequence index of `alpha` (total orders).
  std::optional<std::uint64_t> index;
  /// n₀ of the Wang-Wang comparison.
  std::optional<std::uint64_t> c_index;
  std::optional<KyWitness> ky_witness;

  std::string str() const;
};

/// A finite sequence held no element where the two numbers differ.
class NotSeparated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zadeh order: f <= g iff f(x) <= g(x) for all x, checked as cut inclusion
/// at every merged knot and right-limit.
CompareResult zadeh_compare(const FuzzyNumber& f, const FuzzyNumber& g);

/// Klir-Yuan order: f <= g iff every α-cut of f is KM-below the one of g.
CompareResult ky_compare(const FuzzyNumber& f, const FuzzyNumber& g);

/// Throws std::invalid_argument when the pair is KY-comparable.
KyWitness ky_incomparability_witness(const FuzzyNumber& f, const FuzzyNumber& g);

/// Cut-wise minimum / maximum (the ∧ and ∨ lattice operations).
FuzzyNumber meet(const FuzzyNumber& f, const FuzzyNumber& g);
FuzzyNumber join(const FuzzyNumber& f, const FuzzyNumber& g);

struct MinAlphaResult {
  std::optional<std::uint64_t> index;  ///< empty iff the inputs are equal
  Scalar alpha;
  friend bool operator==(const MinAlphaResult&, const MinAlphaResult&) = default;
};

/// First sequence element, in enumeration order, where the cuts differ;
/// (none, 1) for equal inputs. Throws NotSeparated for finite sequences that
/// miss the difference region.
MinAlphaResult min_alpha(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g);

/// c_i: odd i gives lstar + rstar at α_{(i+1)/2}, even i gives rstar - lstar
/// at α_{i/2}.
Scalar ww_c(const DenseSeq& s, std::uint64_t i, const FuzzyNumber& f);

/// Wang-Wang total order: first i where c_i differs decides.
CompareResult ww_compare(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g);

/// Admissible lift: compare the cuts at min_alpha with the interval order.
CompareResult lift_compare(IntervalOrderKind kind, const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g);

}  // namespace fzo
