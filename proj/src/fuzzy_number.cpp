#include "fuzzyorder/fuzzy_number.hpp"

#include <algorithm>

namespace fzo {

namespace {

std::string join_messages(const std::vector<Violation>& vs) {
  std::string out = "invalid fuzzy number";
  for (const auto& v : vs) out += "; " + v.property + ": " + v.detail;
  return out;
}

/// sup{α in [0,1] : f(α) <= x} for increasing f, or nothing when empty.
std::optional<Scalar> sup_at_most(const MonotonePL& f, const Scalar& x) {
  const auto& knots = f.knots();
  const auto& segs = f.segments();
  if (segs.front().start > x) return std::nullopt;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& s = segs[k];
    if (s.end <= x) continue;
    if (s.start > x) return knots[k];
    // start <= x < end: the linear piece crosses x.
    return knots[k] + (knots[k + 1] - knots[k]) * ((x - s.start) / (s.end - s.start));
  }
  return Scalar(1);
}

}  // namespace

std::vector<Violation> validate(const Envelope& e) {
  std::vector<Violation> out;
  if (e.lstar.direction() != Direction::increasing) {
    out.push_back({"condition i", "lstar must be declared increasing"});
  }
  for (auto& msg : e.lstar.monotonicity_violations()) out.push_back({"condition i", "lstar " + msg});
  if (e.rstar.direction() != Direction::decreasing) {
    out.push_back({"condition ii", "rstar must be declared decreasing"});
  }
  for (auto& msg : e.rstar.monotonicity_violations()) out.push_back({"condition ii", "rstar " + msg});
  const Scalar l1 = e.lstar(1);
  const Scalar r1 = e.rstar(1);
  if (r1 < l1) {
    out.push_back({"condition iii", "lstar(1) = " + l1.str() + " exceeds rstar(1) = " + r1.str()});
  }
  const std::vector<Scalar> knots = merge_knots(e.lstar.knots(), e.rstar.knots());
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const Scalar& a = knots[k];
    if (a > 0 && e.rstar(a) < e.lstar(a)) {
      out.push_back({"ordering", "lstar(" + a.str() + ") = " + e.lstar(a).str() + " exceeds rstar(" + a.str() +
                                     ") = " + e.rstar(a).str()});
    }
    if (a < 1 && e.rstar.right_limit(a) < e.lstar.right_limit(a)) {
      out.push_back({"ordering", "lstar exceeds rstar just above alpha = " + a.str()});
    }
  }
  return out;
}

InvalidFuzzyNumber::InvalidFuzzyNumber(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

FuzzyNumber::FuzzyNumber(const Envelope& e) : lstar_(e.lstar.canonical()), rstar_(e.rstar.canonical()) {
  auto violations = validate(e);
  if (!violations.empty()) throw InvalidFuzzyNumber(std::move(violations));
}

FuzzyNumber FuzzyNumber::triangular(const Scalar& a, const Scalar& b, const Scalar& c) {
  if (b < a || c < b) throw std::invalid_argument("triangular needs a <= b <= c");
  return FuzzyNumber(MonotonePL::linear(Direction::increasing, a, b), MonotonePL::linear(Direction::decreasing, c, b));
}

FuzzyNumber FuzzyNumber::trapezoid(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  if (b < a || c < b || d < c) throw std::invalid_argument("trapezoid needs a <= b <= c <= d");
  return FuzzyNumber(MonotonePL::linear(Direction::increasing, a, b), MonotonePL::linear(Direction::decreasing, d, c));
}

FuzzyNumber FuzzyNumber::from_interval(const Interval& i) {
  return FuzzyNumber(MonotonePL::constant(Direction::increasing, i.lo()),
                     MonotonePL::constant(Direction::decreasing, i.hi()));
}

Interval FuzzyNumber::alpha_cut(const Scalar& alpha) const { return {lstar_(alpha), rstar_(alpha)}; }

Interval FuzzyNumber::cut_right_limit(const Scalar& alpha) const {
  return {lstar_.right_limit(alpha), rstar_.right_limit(alpha)};
}

Scalar FuzzyNumber::membership(const Scalar& x) const {
  const auto left = sup_at_most(lstar_, x);
  // r*(α) >= x  <=>  -r*(α) <= -x
  const auto right = sup_at_most(rstar_.negated(), -x);
  if (!left || !right) return 0;
  return min(*left, *right);
}

FuzzyNumber FuzzyNumber::translated(const Scalar& delta) const {
  return FuzzyNumber(lstar_.translated(delta), rstar_.translated(delta));
}

std::vector<Scalar> FuzzyNumber::knots() const { return merge_knots(lstar_.knots(), rstar_.knots()); }

std::vector<Scalar> FuzzyNumber::membership_breakpoints() const {
  std::vector<Scalar> xs;
  for (const auto* side : {&lstar_, &rstar_}) {
    for (const auto& s : side->segments()) {
      xs.push_back(s.start);
      xs.push_back(s.end);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool equal(const FuzzyNumber& f, const FuzzyNumber& g) { return f == g; }

AlignedPair align(const FuzzyNumber& f, const FuzzyNumber& g) {
  std::vector<Scalar> knots = merge_knots(f.knots(), g.knots());
  return AlignedPair{knots, f.lstar().refined(knots), f.rstar().refined(knots), g.lstar().refined(knots),
                     g.rstar().refined(knots)};
}

namespace {

/// Zero set of an affine function on (a, b] with right-limit d0 and end d1.
struct ZeroSet {
  enum Kind { none, point, all } kind;
  Scalar at;
};

ZeroSet zeros(const Scalar& a, const Scalar& b, const Scalar& d0, const Scalar& d1) {
  if (d0 == 0 && d1 == 0) return {ZeroSet::all, {}};
  if (d1 == 0) return {ZeroSet::point, b};
  if (d0.sign() * d1.sign() < 0) return {ZeroSet::point, a + (b - a) * (d0 / (d0 - d1))};
  return {ZeroSet::none, {}};
}

}  // namespace

AlphaSet diff_region(const FuzzyNumber& f, const FuzzyNumber& g) {
  AlphaSet out;
  if (f == g) return out;
  const AlignedPair p = align(f, g);
  for (std::size_t k = 0; k < p.segment_count(); ++k) {
    const Scalar& a = p.knots[k];
    const Scalar& b = p.knots[k + 1];
    const Segment& lf = p.lf.segments()[k];
    const Segment& lg = p.lg.segments()[k];
    const Segment& rf = p.rf.segments()[k];
    const Segment& rg = p.rg.segments()[k];
    const ZeroSet zl = zeros(a, b, lf.start - lg.start, lf.end - lg.end);
    const ZeroSet zr = zeros(a, b, rf.start - rg.start, rf.end - rg.end);
    // Where both endpoint differences vanish the cuts agree.
    ZeroSet eq{ZeroSet::none, {}};
    if (zl.kind == ZeroSet::all) {
      eq = zr;
    } else if (zr.kind == ZeroSet::all) {
      eq = zl;
    } else if (zl.kind == ZeroSet::point && zr.kind == ZeroSet::point && zl.at == zr.at) {
      eq = zl;
    }
    switch (eq.kind) {
      case ZeroSet::all:
        break;
      case ZeroSet::none:
        append_merged(out, {a, b, false, true});
        break;
      case ZeroSet::point:
        if (eq.at == b) {
          append_merged(out, {a, b, false, false});
        } else {
          append_merged(out, {a, eq.at, false, false});
          append_merged(out, {eq.at, b, false, true});
        }
        break;
    }
  }
  return out;
}

}  // namespace fzo
