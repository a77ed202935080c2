#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "fuzzyorder/dense_sequence.hpp"
#include "fuzzyorder/fuzzy_number.hpp"
#include "fuzzyorder/orders.hpp"

// Random generators and brute-force oracles. The oracles evaluate cuts and
// membership values directly and never call the comparison code in
// orders.cpp.
namespace fzo::oracle {

struct GeneratorConfig {
  std::uint64_t seed = 1;
  unsigned max_knots = 4;     ///< segments per envelope side, at most
  Scalar coordinate_bound = 8;
  Scalar jump_probability = Scalar(1, 4);
};

/// Throws std::invalid_argument on max_knots < 1, bound <= 0 or a
/// probability outside [0, 1].
void check(const GeneratorConfig& cfg);

/// Deterministic stream of random fuzzy numbers. Coordinates are multiples
/// of coordinate_bound / 16 and knots multiples of 1/24, so ties between
/// independent draws are common.
class Generator {
 public:
  explicit Generator(const GeneratorConfig& cfg);

  FuzzyNumber fuzzy();
  /// (f, g) with f <_KY g: g adds a nonnegative increasing shift to lstar
  /// and a nonnegative decreasing shift to rstar, somewhere positive.
  std::pair<FuzzyNumber, FuzzyNumber> ky_pair();
  /// KY-incomparable pair: proper nesting near α = 0, or a KM reversal
  /// between α = 1 and small α.
  std::pair<FuzzyNumber, FuzzyNumber> crossing_pair();
  /// Three numbers, often sharing cuts with one another so that total
  /// orders must look past the first enumerated α.
  std::array<FuzzyNumber, 3> triple();

  std::uint64_t below(std::uint64_t n);
  bool chance(const Scalar& p);

 private:
  std::vector<Scalar> knots();
  /// Increasing envelope with value 0 at α = 0 built from random flats,
  /// slopes and jumps.
  MonotonePL rising();
  /// Nonnegative decreasing envelope, positive at α = 0 when `positive_at_zero`.
  MonotonePL falling(bool positive_at_zero);

  GeneratorConfig cfg_;
  Scalar unit_;
  std::mt19937_64 rng_;
};

FuzzyNumber random_fuzzy(const GeneratorConfig& cfg);
std::pair<FuzzyNumber, FuzzyNumber> random_ky_pair(const GeneratorConfig& cfg);
std::pair<FuzzyNumber, FuzzyNumber> random_crossing_pair(const GeneratorConfig& cfg);

/// (lstar + left_shift, rstar + right_shift). Throws InvalidFuzzyNumber when
/// the result is not a fuzzy number.
FuzzyNumber shifted(const FuzzyNumber& f, const MonotonePL& left_shift, const MonotonePL& right_shift);

/// KM comparison of the cuts at every dyadic of level <= `levels` and at α = 0.
CompareResult sampled_ky(const FuzzyNumber& f, const FuzzyNumber& g, unsigned levels);

/// max{α dyadic of level <= levels : x in alpha_cut(f, α)}, or 0.
Scalar sampled_membership_sup(const FuzzyNumber& f, const Scalar& x, unsigned levels);

/// First index i <= limit with differing cuts, by evaluating cuts one by one.
std::optional<std::uint64_t> scan_first_difference(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g,
                                                   std::uint64_t limit);

/// Extension-principle meet / join evaluated from membership values only.
Scalar meet_membership(const FuzzyNumber& f, const FuzzyNumber& g, const Scalar& x);
Scalar join_membership(const FuzzyNumber& f, const FuzzyNumber& g, const Scalar& x);

/// f(x) <= g(x) for every real x, decided on the merged membership
/// breakpoints with one-sided limits recovered from interior samples.
bool membership_dominated(const FuzzyNumber& f, const FuzzyNumber& g);

/// Breakpoints of both membership functions plus the midpoints between them.
std::vector<Scalar> membership_grid(const FuzzyNumber& f, const FuzzyNumber& g);

}  // namespace fzo::oracle
