#include "fuzzyorder/selector.hpp"

namespace fzo {

FuzzyOrder zadeh_order() { return {"zadeh", false, zadeh_compare}; }

FuzzyOrder ky_order() { return {"ky", false, ky_compare}; }

FuzzyOrder ww_order(const DenseSeq& s) {
  return {"ww:" + s.tag(), true, [s](const FuzzyNumber& f, const FuzzyNumber& g) { return ww_compare(s, f, g); }};
}

FuzzyOrder lift_order(IntervalOrderKind kind, const DenseSeq& s) {
  return {"lift:" + std::string(to_string(kind)) + ":" + s.tag(), true,
          [kind, s](const FuzzyNumber& f, const FuzzyNumber& g) { return lift_compare(kind, s, f, g); }};
}

FuzzyOrder broken_lift_order(IntervalOrderKind kind, const DenseSeq& s) {
  if (!s.finite()) throw std::invalid_argument("the broken lift needs a finite sequence");
  return {"debug:broken-lift:" + std::string(to_string(kind)) + ":" + s.tag(), true,
          [kind, s](const FuzzyNumber& f, const FuzzyNumber& g) -> CompareResult {
            std::optional<Scalar> least;
            for (std::uint64_t i = 1; i <= s.size(); ++i) {
              const Scalar a = s.at(i);
              if (f.alpha_cut(a) != g.alpha_cut(a) && (!least || a < *least)) least = a;
            }
            if (!least) return {Relation::equal, {}, {}, {}, {}};
            return {to_relation(total_compare(kind, f.alpha_cut(*least), g.alpha_cut(*least))), least, {}, {}, {}};
          }};
}

FuzzyOrder parse_order(std::string_view selector) {
  const std::string text(selector);
  auto fail = [&text](const std::string& why) -> FuzzyOrder {
    throw std::invalid_argument("bad order selector '" + text + "': " + why);
  };
  if (selector == "zadeh") return zadeh_order();
  if (selector == "ky") return ky_order();
  auto kind_and_seq = [&](std::string_view rest, bool broken) {
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) return fail("expected <kind>:<sequence>");
    const auto kind = parse_interval_order(rest.substr(0, colon));
    if (!kind) return fail("unknown interval order '" + std::string(rest.substr(0, colon)) + "'");
    const DenseSeq s = DenseSeq::parse(rest.substr(colon + 1));
    return broken ? broken_lift_order(*kind, s) : lift_order(*kind, s);
  };
  constexpr std::string_view ww = "ww:";
  constexpr std::string_view lift = "lift:";
  constexpr std::string_view broken = "debug:broken-lift:";
  if (selector.starts_with(ww)) return ww_order(DenseSeq::parse(selector.substr(ww.size())));
  if (selector.starts_with(lift)) return kind_and_seq(selector.substr(lift.size()), false);
  if (selector.starts_with(broken)) return kind_and_seq(selector.substr(broken.size()), true);
  return fail("expected zadeh, ky, ww:<seq> or lift:<kind>:<seq>");
}

}  // namespace fzo
