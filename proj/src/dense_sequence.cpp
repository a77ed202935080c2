#include "fuzzyorder/dense_sequence.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace fzo {

namespace {

constexpr unsigned kMaxLevel = 63;

/// Least k with 2^-k < w, for w > 0.
unsigned level_finer_than(const Scalar& w) {
  unsigned k = 0;
  while (!(Scalar(1) / pow2(k) < w)) {
    if (++k > kMaxLevel) throw std::overflow_error("width below 2^-63: " + w.str());
  }
  return k;
}

}  // namespace

Scalar dyadic(std::uint64_t index) {
  if (index < 1) throw std::invalid_argument("dyadic index must be >= 1");
  if (index == 1) return 1;
  const auto level = static_cast<unsigned>(std::bit_width(index - 1));
  const std::uint64_t pos = index - (std::uint64_t{1} << (level - 1));
  const std::uint64_t numerator = 2 * pos - 1;
  return Scalar(mpq_class(mpz_class(std::to_string(numerator), 10))) / pow2(level);
}

std::optional<std::uint64_t> dyadic_index(const Scalar& alpha) {
  if (alpha <= 0 || alpha > 1) return std::nullopt;
  if (alpha == 1) return 1;
  const mpz_class den = alpha.denominator();
  if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
  const auto level = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  if (level > kMaxLevel) return std::nullopt;
  const mpz_class numerator = alpha.numerator();
  const std::uint64_t j = std::stoull(numerator.get_str());
  return (std::uint64_t{1} << (level - 1)) + (j + 1) / 2;
}

std::uint64_t dyadic_count_through_level(unsigned level) {
  if (level > kMaxLevel) throw std::overflow_error("level too deep");
  return std::uint64_t{1} << level;
}

DenseSeq DenseSeq::grid(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  return DenseSeq(Kind::grid, n, {});
}

DenseSeq DenseSeq::list(std::vector<Scalar> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0 || values[i] > 1) throw std::invalid_argument("sequence values must lie in (0, 1]");
    for (std::size_t j = 0; j < i; ++j) {
      if (values[i] == values[j]) throw std::invalid_argument("sequence must be injective");
    }
  }
  const std::uint64_t n = values.size();
  return DenseSeq(Kind::list, n, std::move(values));
}

DenseSeq DenseSeq::parse(std::string_view tag) {
  if (tag == "dyadic") return dyadic();
  constexpr std::string_view prefix = "grid:";
  if (tag.substr(0, prefix.size()) == prefix) {
    const std::string digits(tag.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 18) {
      throw std::invalid_argument("bad grid size in sequence tag '" + std::string(tag) + "'");
    }
    return grid(std::stoull(digits));
  }
  throw std::invalid_argument("unknown sequence '" + std::string(tag) + "' (expected dyadic or grid:<n>)");
}

std::string DenseSeq::tag() const {
  switch (kind_) {
    case Kind::dyadic: return "dyadic";
    case Kind::grid: return "grid:" + std::to_string(n_);
    case Kind::list: return "list:" + std::to_string(n_);
  }
  return "?";
}

std::uint64_t DenseSeq::size() const {
  if (kind_ == Kind::dyadic) return std::numeric_limits<std::uint64_t>::max();
  return n_;
}

Scalar DenseSeq::at(std::uint64_t index) const {
  if (index < 1) throw std::invalid_argument("sequence index must be >= 1");
  switch (kind_) {
    case Kind::dyadic:
      return fzo::dyadic(index);
    case Kind::grid:
      if (index > n_) throw std::out_of_range("grid index past the end");
      return Scalar(mpq_class(mpz_class(std::to_string(index), 10), mpz_class(std::to_string(n_), 10)));
    case Kind::list:
      if (index > n_) throw std::out_of_range("list index past the end");
      return values_[index - 1];
  }
  throw std::logic_error("unknown sequence kind");
}

std::optional<std::uint64_t> DenseSeq::first_index_in(const AlphaSet& set) const {
  if (set.empty()) return std::nullopt;
  if (kind_ != Kind::dyadic) {
    for (std::uint64_t i = 1; i <= n_; ++i) {
      if (contains(set, at(i))) return i;
    }
    return std::nullopt;
  }
  if (contains(set, 1)) return 1;
  for (unsigned level = 1; level <= kMaxLevel; ++level) {
    const Scalar scale = pow2(level);
    for (const auto& piece : set) {
      const Scalar lower = piece.lo * scale;
      mpz_class j = piece.lo_closed ? ceil(lower) : floor(lower) + 1;
      if (j % 2 == 0) ++j;
      if (j <= 0) j = 1;
      if (piece.contains(Scalar(mpq_class(j)) / scale)) {
        // Pieces are sorted, so the first hit has the smallest numerator.
        const std::uint64_t jj = std::stoull(j.get_str());
        return (std::uint64_t{1} << (level - 1)) + (jj + 1) / 2;
      }
    }
  }
  throw std::overflow_error("no dyadic of level <= 63 in " + to_string(set));
}

std::optional<std::uint64_t> density_check(const DenseSeq& s, const Scalar& x, const Scalar& epsilon,
                                           std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const Scalar upper = x + epsilon;
  const std::uint64_t limit = s.finite() ? std::min(budget, s.size()) : budget;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    const Scalar a = s.at(i);
    if (x <= a && a < upper) return i;
  }
  return std::nullopt;
}

std::uint64_t dyadic_density_budget(const Scalar& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  unsigned k = 0;
  while (Scalar(1) / pow2(k) > epsilon) {
    if (++k >= kMaxLevel) throw std::overflow_error("epsilon too small");
  }
  return std::uint64_t{1} << (k + 1);
}

std::uint64_t dyadic_scan_bound(const AlphaSet& set) {
  std::optional<std::uint64_t> best;
  auto offer = [&best](std::uint64_t b) {
    if (!best || b < *best) best = b;
  };
  for (const auto& piece : set) {
    if (piece.contains(1)) {
      offer(1);
    } else if (piece.width() > 0) {
      offer(dyadic_count_through_level(level_finer_than(piece.width())));
    } else if (auto idx = dyadic_index(piece.lo)) {
      offer(*idx);
    }
  }
  if (!best) throw std::invalid_argument("no dyadic scan bound for " + to_string(set));
  return *best;
}

}  // namespace fzo
