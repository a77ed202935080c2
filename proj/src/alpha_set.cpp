#include "fuzzyorder/alpha_set.hpp"

namespace fzo {

Scalar AlphaInterval::representative() const {
  if (hi_closed) return hi;
  if (lo_closed && lo == hi) return lo;
  return (lo + hi) / 2;
}

std::string AlphaInterval::str() const {
  if (lo == hi) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

std::optional<AlphaInterval> make_alpha_interval(Scalar lo, bool lo_closed, Scalar hi, bool hi_closed) {
  if (hi < lo) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return AlphaInterval{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

std::optional<AlphaInterval> intersect(const AlphaInterval& a, const AlphaInterval& b) {
  Scalar lo = a.lo;
  bool lo_closed = a.lo_closed;
  if (b.lo > lo || (b.lo == lo && !b.lo_closed)) {
    lo = b.lo;
    lo_closed = b.lo_closed;
  }
  Scalar hi = a.hi;
  bool hi_closed = a.hi_closed;
  if (b.hi < hi || (b.hi == hi && !b.hi_closed)) {
    hi = b.hi;
    hi_closed = b.hi_closed;
  }
  return make_alpha_interval(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

void append_merged(AlphaSet& set, const AlphaInterval& piece) {
  if (!set.empty()) {
    AlphaInterval& last = set.back();
    if (last.hi == piece.lo && (last.hi_closed || piece.lo_closed)) {
      last.hi = piece.hi;
      last.hi_closed = piece.hi_closed;
      return;
    }
  }
  set.push_back(piece);
}

bool contains(const AlphaSet& set, const Scalar& a) {
  for (const auto& piece : set) {
    if (piece.contains(a)) return true;
  }
  return false;
}

std::string to_string(const AlphaSet& set) {
  if (set.empty()) return "{}";
  std::string out;
  for (const auto& piece : set) {
    if (!out.empty()) out += " U ";
    out += piece.str();
  }
  return out;
}

std::optional<AlphaInterval> positive_part(const Scalar& a, const Scalar& b, const Scalar& d0, const Scalar& d1) {
  const int s0 = d0.sign();
  const int s1 = d1.sign();
  if (s0 > 0 && s1 > 0) return AlphaInterval{a, b, false, true};
  if (s0 > 0) {
    // Falls to zero at c inside (a, b].
    const Scalar c = a + (b - a) * (d0 / (d0 - d1));
    return make_alpha_interval(a, false, c, false);
  }
  if (s1 > 0) {
    const Scalar c = a + (b - a) * (d0 / (d0 - d1));
    return make_alpha_interval(c, false, b, true);
  }
  return std::nullopt;
}

}  // namespace fzo
