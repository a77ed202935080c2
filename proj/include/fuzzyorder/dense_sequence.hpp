#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyorder/alpha_set.hpp"
#include "fuzzyorder/scalar.hpp"

namespace fzo {

/// Breadth-first dyadic enumeration: 1, 1/2, 1/4, 3/4, 1/8, 3/8, ...
/// Index 1 is 1; level k >= 1 occupies indices 2^(k-1)+1 .. 2^k.
Scalar dyadic(std::uint64_t index);
/// Inverse of `dyadic`; nothing for non-dyadic values or values outside (0, 1].
std::optional<std::uint64_t> dyadic_index(const Scalar& alpha);
/// Number of dyadic elements through level k (that is 2^k).
std::uint64_t dyadic_count_through_level(unsigned level);

/// Enumerated sequence in (0, 1]. Only the dyadic kind is upper dense; the
/// grid and explicit kinds are finite and may fail to separate.
class DenseSeq {
 public:
  enum class Kind { dyadic, grid, list };

  static DenseSeq dyadic() { return DenseSeq(Kind::dyadic, 0, {}); }
  /// (1/n, 2/n, ..., 1).
  static DenseSeq grid(std::uint64_t n);
  /// Explicit finite enumeration; values must be distinct and inside (0, 1].
  static DenseSeq list(std::vector<Scalar> values);
  /// `dyadic` or `grid:<n>`.
  static DenseSeq parse(std::string_view tag);

  Kind kind() const { return kind_; }
  std::string tag() const;
  bool finite() const { return kind_ != Kind::dyadic; }
  /// Number of elements for finite kinds.
  std::uint64_t size() const;

  /// α_i for i >= 1.
  Scalar at(std::uint64_t index) const;

  /// Smallest index whose element lies in `set`, or nothing if a finite
  /// sequence has none. For the dyadic kind the search walks level by level
  /// and throws std::overflow_error past level 62.
  std::optional<std::uint64_t> first_index_in(const AlphaSet& set) const;

 private:
  DenseSeq(Kind kind, std::uint64_t n, std::vector<Scalar> values)
      : kind_(kind), n_(n), values_(std::move(values)) {}

  Kind kind_;
  std::uint64_t n_;
  std::vector<Scalar> values_;
};

/// Smallest index i <= budget with α_i in [x, x + ε), if any.
std::optional<std::uint64_t> density_check(const DenseSeq& s, const Scalar& x, const Scalar& epsilon,
                                           std::uint64_t budget);

/// Budget that guarantees `density_check` succeeds for the dyadic sequence:
/// 2^(ceil(log2(1/ε)) + 1).
std::uint64_t dyadic_density_budget(const Scalar& epsilon);

/// Upper bound on the dyadic index of the first element of a nonempty set:
/// 1 if the set holds 1, else 2^k for the least k with 2^-k below the width
/// of some piece.
std::uint64_t dyadic_scan_bound(const AlphaSet& set);

}  // namespace fzo
