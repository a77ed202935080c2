#include "fuzzyorder/scalar.hpp"

#include <cctype>

namespace fzo {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  return pos;
}

mpz_class to_mpz(std::string_view digits) {
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Scalar::Scalar(long long v) {
  // mpq_class has no long long constructor on every platform.
  value_ = mpq_class(mpz_class(std::to_string(v), 10));
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  std::size_t pos = 0;
  // Surrounding whitespace is tolerated; interior whitespace is not.
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string_view s = text.substr(0, end);

  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::size_t int_begin = pos;
  pos = scan_digits(s, pos);
  std::string_view int_digits = s.substr(int_begin, pos - int_begin);

  mpq_class value;
  if (pos < s.size() && s[pos] == '/') {
    if (int_digits.empty()) throw ParseError("expected numerator digits", int_begin);
    const std::size_t den_begin = ++pos;
    pos = scan_digits(s, pos);
    if (pos == den_begin) throw ParseError("expected denominator digits", den_begin);
    if (pos != s.size()) throw ParseError("unexpected character in rational", pos);
    mpz_class den = to_mpz(s.substr(den_begin, pos - den_begin));
    if (den == 0) throw ParseError("zero denominator", den_begin);
    value = mpq_class(to_mpz(int_digits), den);
  } else {
    std::string_view frac_digits;
    if (pos < s.size() && s[pos] == '.') {
      const std::size_t frac_begin = ++pos;
      pos = scan_digits(s, pos);
      frac_digits = s.substr(frac_begin, pos - frac_begin);
    }
    if (int_digits.empty() && frac_digits.empty()) {
      throw ParseError("expected a rational literal", int_begin);
    }
    long exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      ++pos;
      bool exp_negative = false;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        exp_negative = s[pos] == '-';
        ++pos;
      }
      const std::size_t exp_begin = pos;
      pos = scan_digits(s, pos);
      if (pos == exp_begin || pos - exp_begin > 6) throw ParseError("bad exponent", exp_begin);
      exponent = std::stol(std::string(s.substr(exp_begin, pos - exp_begin)));
      if (exp_negative) exponent = -exponent;
    }
    if (pos != s.size()) throw ParseError("unexpected character in rational", pos);
    mpz_class mantissa = to_mpz(std::string(int_digits) + std::string(frac_digits));
    exponent -= static_cast<long>(frac_digits.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? mpq_class(mantissa, scale) : mpq_class(mantissa * scale);
  }
  value.canonicalize();
  if (negative) value = -value;
  return Scalar(value);
}

std::string Scalar::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Scalar::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Round half away from zero.
  mpq_class scaled = abs(value_) * scale;
  mpz_class q = scaled.get_num() * 2 + scaled.get_den();
  mpz_class d = scaled.get_den() * 2;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = value_ < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

mpz_class floor(const Scalar& s) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), s.raw().get_num_mpz_t(), s.raw().get_den_mpz_t());
  return r;
}

mpz_class ceil(const Scalar& s) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), s.raw().get_num_mpz_t(), s.raw().get_den_mpz_t());
  return r;
}

Scalar pow2(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -static_cast<long>(k) : k));
  return k < 0 ? Scalar(mpq_class(mpz_class(1), p)) : Scalar(mpq_class(p));
}

}  // namespace fzo
