#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fzo {

/// Raised when a rational literal cannot be parsed. `position()` is the
/// offset of the offending character inside the literal.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact rational number; the coordinate type for every quantity in the
/// library. Always stored in lowest terms with a positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v);  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Accepts `p`, `p/q` and finite decimals such as `-0.125` or `2.5e-3`;
  /// decimals are converted exactly.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// `p/q`, or `p` when the denominator is one.
  std::string str() const;
  /// Rounded decimal with `digits` fractional digits (display only).
  std::string decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(mpq_class(-a.value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class value_;
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar abs(const Scalar& s);
/// Largest integer not above `s`.
mpz_class floor(const Scalar& s);
/// Smallest integer not below `s`.
mpz_class ceil(const Scalar& s);
/// 2^k as a Scalar.
Scalar pow2(int k);

}  // namespace fzo
