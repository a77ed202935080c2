#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "fuzzyorder/orders.hpp"

namespace fzo {

/// An order on fuzzy numbers chosen by name.
struct FuzzyOrder {
  std::string name;
  bool total = false;
  std::function<CompareResult(const FuzzyNumber&, const FuzzyNumber&)> compare;
};

FuzzyOrder zadeh_order();
FuzzyOrder ky_order();
FuzzyOrder ww_order(const DenseSeq& s);
FuzzyOrder lift_order(IntervalOrderKind kind, const DenseSeq& s);
/// Deliberately wrong lift used to exercise the harness: takes the least
/// *value* of the finite sequence where the cuts differ and answers "=" when
/// there is none, so unequal numbers can compare equal.
FuzzyOrder broken_lift_order(IntervalOrderKind kind, const DenseSeq& s);

/// Parses `zadeh`, `ky`, `ww:<seq>`, `lift:<lex1|lex2|xy>:<seq>` and the
/// harness self-test selector `debug:broken-lift:<kind>:<seq>`, where <seq>
/// is `dyadic` or `grid:<n>`. Throws std::invalid_argument otherwise.
FuzzyOrder parse_order(std::string_view selector);

}  // namespace fzo
