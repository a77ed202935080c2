#pragma once

#include <span>
#include <string>
#include <vector>

#include "fuzzyorder/scalar.hpp"

namespace fzo {

enum class Direction { increasing, decreasing };

/// One linear piece on (knot[k-1], knot[k]]: `start` is the right-limit at
/// the left knot, `end` the value attained at the right knot.
struct Segment {
  Scalar start;
  Scalar end;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Left-continuous piecewise-linear function on [0, 1], right-continuous at
/// 0, with jumps allowed at knots. Knots run 0 = a_0 < a_1 < ... < a_n = 1 and
/// segment k covers (a_{k-1}, a_k]. A jump at a_k is segs[k].start !=
/// segs[k-1].end; a flat is start == end.
///
/// The constructor enforces only the knot structure. Monotonicity in the
/// declared direction is reported by `monotonicity_violations()` so that
/// invalid envelopes can be loaded and diagnosed.
class MonotonePL {
 public:
  MonotonePL(Direction dir, std::vector<Scalar> knots, std::vector<Segment> segments);

  static MonotonePL constant(Direction dir, const Scalar& value);
  /// Single linear segment from `at_zero` to `at_one`.
  static MonotonePL linear(Direction dir, const Scalar& at_zero, const Scalar& at_one);

  Direction direction() const { return dir_; }
  const std::vector<Scalar>& knots() const { return knots_; }
  const std::vector<Segment>& segments() const { return segs_; }

  /// Value at alpha in [0, 1].
  Scalar operator()(const Scalar& alpha) const;
  /// Limit from the right at alpha in [0, 1).
  Scalar right_limit(const Scalar& alpha) const;

  /// Human-readable description of every place the declared direction is
  /// violated, inside a segment or across a knot.
  std::vector<std::string> monotonicity_violations() const;

  /// Minimal representation: adjacent collinear segments without a jump
  /// between them are merged.
  MonotonePL canonical() const;
  /// Same function with every knot of `extra` inserted (extra must be sorted
  /// and inside [0, 1]).
  MonotonePL refined(std::span<const Scalar> extra) const;

  MonotonePL translated(const Scalar& delta) const;
  /// x -> -f(x); flips the direction.
  MonotonePL negated() const;

  friend bool operator==(const MonotonePL&, const MonotonePL&) = default;

 private:
  Direction dir_;
  std::vector<Scalar> knots_;
  std::vector<Segment> segs_;
};

/// Pointwise minimum / maximum / sum of two functions with the same
/// direction. New knots appear where the two cross inside a segment.
MonotonePL pointwise_min(const MonotonePL& f, const MonotonePL& g);
MonotonePL pointwise_max(const MonotonePL& f, const MonotonePL& g);
MonotonePL pointwise_sum(const MonotonePL& f, const MonotonePL& g);

/// Sorted union of the knot sets.
std::vector<Scalar> merge_knots(std::span<const Scalar> a, std::span<const Scalar> b);

/// Linear interpolation of a segment over (a, b] evaluated at t.
Scalar interpolate(const Scalar& a, const Scalar& b, const Segment& seg, const Scalar& t);

}  // namespace fzo
