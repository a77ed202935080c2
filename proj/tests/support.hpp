#pragma once

#include <doctest.h>

#include "fuzzyorder/fuzzy_number.hpp"
#include "fuzzyorder/scalar.hpp"

namespace fzo::test {

inline Scalar q(const char* text) { return Scalar::parse(text); }
inline Interval iv(const char* lo, const char* hi) { return {q(lo), q(hi)}; }
inline FuzzyNumber tri(const Scalar& a, const Scalar& b, const Scalar& c) { return FuzzyNumber::triangular(a, b, c); }

// The four-piece number used throughout: kernel [3,4], l rises in two steps
// with a jump at 2, r falls in two steps with a jump at 5.
FuzzyNumber worked_example();

}  // namespace fzo::test

namespace doctest {
template <>
struct StringMaker<fzo::Scalar> {
  static String convert(const fzo::Scalar& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<fzo::Interval> {
  static String convert(const fzo::Interval& i) { return i.str().c_str(); }
};
}  // namespace doctest
