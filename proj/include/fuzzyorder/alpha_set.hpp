#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzyorder/scalar.hpp"

namespace fzo {

/// Interval of α values with explicit open/closed ends. Never empty.
struct AlphaInterval {
  Scalar lo;
  Scalar hi;
  bool lo_closed = false;
  bool hi_closed = true;

  bool contains(const Scalar& a) const {
    return (lo_closed ? lo <= a : lo < a) && (hi_closed ? a <= hi : a < hi);
  }
  Scalar width() const { return hi - lo; }
  /// An exact point of the interval: `hi` when closed there, else the midpoint.
  Scalar representative() const;
  std::string str() const;
  friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;
};

/// Builds the interval, or nothing when the bounds describe an empty set.
std::optional<AlphaInterval> make_alpha_interval(Scalar lo, bool lo_closed, Scalar hi, bool hi_closed);
std::optional<AlphaInterval> intersect(const AlphaInterval& a, const AlphaInterval& b);

/// Finite union of disjoint, sorted, maximal α-intervals.
using AlphaSet = std::vector<AlphaInterval>;

/// Appends `piece`, fusing it with the last element when they touch.
/// Pieces must arrive in increasing order.
void append_merged(AlphaSet& set, const AlphaInterval& piece);
bool contains(const AlphaSet& set, const Scalar& a);
std::string to_string(const AlphaSet& set);

/// {α in (a, b] : d(α) > 0} for the affine d with right-limit d0 at a and
/// value d1 at b.
std::optional<AlphaInterval> positive_part(const Scalar& a, const Scalar& b, const Scalar& d0, const Scalar& d1);

}  // namespace fzo
