#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuzzyorder/alpha_set.hpp"
#include "fuzzyorder/interval.hpp"
#include "fuzzyorder/monotone_pl.hpp"

namespace fzo {

/// Raw (l*, r*) pair as read from a document; may violate the fuzzy-number
/// conditions. `validate` says which.
struct Envelope {
  MonotonePL lstar;
  MonotonePL rstar;
};

/// Checks the α-cut parameterization conditions:
///   i   lstar is increasing
///   ii  rstar is decreasing
///   iii lstar(1) <= rstar(1)
/// plus lstar <= rstar at every knot and right-limit (implied by i-iii,
/// asserted on its own). Left-continuity and right-continuity at 0 hold by
/// construction of MonotonePL.
std::vector<Violation> validate(const Envelope& e);

class InvalidFuzzyNumber : public std::invalid_argument {
 public:
  explicit InvalidFuzzyNumber(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Open support (ω₁, ω₂). alpha_cut(f, 0) returns its closure.
struct Support {
  Scalar lower;
  Scalar upper;
};

/// Fuzzy number given by its α-cut envelopes. Always valid and stored in
/// canonical form, so equality is structural.
class FuzzyNumber {
 public:
  /// Throws InvalidFuzzyNumber when `validate` reports anything.
  explicit FuzzyNumber(const Envelope& e);
  FuzzyNumber(const MonotonePL& lstar, const MonotonePL& rstar) : FuzzyNumber(Envelope{lstar, rstar}) {}

  static FuzzyNumber triangular(const Scalar& a, const Scalar& b, const Scalar& c);
  static FuzzyNumber trapezoid(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
  /// Characteristic function of the interval.
  static FuzzyNumber from_interval(const Interval& i);
  static FuzzyNumber real(const Scalar& x) { return from_interval(Interval(x)); }

  const MonotonePL& lstar() const { return lstar_; }
  const MonotonePL& rstar() const { return rstar_; }
  Envelope envelope() const { return {lstar_, rstar_}; }

  /// [lstar(α), rstar(α)] for α in [0, 1].
  Interval alpha_cut(const Scalar& alpha) const;
  /// Limit of the cuts as β decreases to α, for α in [0, 1).
  Interval cut_right_limit(const Scalar& alpha) const;
  /// sup{α in [0,1] : lstar(α) <= x <= rstar(α)}, exact.
  Scalar membership(const Scalar& x) const;

  Support support() const { return {lstar_(0), rstar_(0)}; }
  Interval kernel() const { return alpha_cut(1); }
  Scalar height() const { return 1; }

  FuzzyNumber translated(const Scalar& delta) const;
  /// Sorted union of the knots of both envelopes.
  std::vector<Scalar> knots() const;
  /// Every x where the membership function can change slope or jump.
  std::vector<Scalar> membership_breakpoints() const;

  friend bool operator==(const FuzzyNumber&, const FuzzyNumber&) = default;

 private:
  MonotonePL lstar_;
  MonotonePL rstar_;
};

bool equal(const FuzzyNumber& f, const FuzzyNumber& g);

/// All four envelopes of a pair refined to their common knot set, so that
/// segment k of every envelope covers the same (knots[k], knots[k+1]].
struct AlignedPair {
  std::vector<Scalar> knots;
  MonotonePL lf, rf, lg, rg;

  std::size_t segment_count() const { return knots.size() - 1; }
  Interval f_limit(std::size_t k) const { return {lf.segments()[k].start, rf.segments()[k].start}; }
  Interval g_limit(std::size_t k) const { return {lg.segments()[k].start, rg.segments()[k].start}; }
  Interval f_end(std::size_t k) const { return {lf.segments()[k].end, rf.segments()[k].end}; }
  Interval g_end(std::size_t k) const { return {lg.segments()[k].end, rg.segments()[k].end}; }
};

AlignedPair align(const FuzzyNumber& f, const FuzzyNumber& g);

/// {α in (0, 1] : alpha_cut(f, α) != alpha_cut(g, α)} as maximal pieces.
AlphaSet diff_region(const FuzzyNumber& f, const FuzzyNumber& g);

}  // namespace fzo
