#include "fuzzyorder/orders.hpp"

#include <functional>

namespace fzo {

const char* symbol(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::equal: return "=";
    case Relation::greater: return ">";
    case Relation::incomparable: return "||";
  }
  return "?";
}

Relation reverse(Relation r) {
  if (r == Relation::less) return Relation::greater;
  if (r == Relation::greater) return Relation::less;
  return r;
}

Relation to_relation(Ordering o) {
  switch (o) {
    case Ordering::less: return Relation::less;
    case Ordering::equal: return Relation::equal;
    case Ordering::greater: return Relation::greater;
  }
  return Relation::incomparable;
}

std::string KyWitness::str() const {
  if (kind == Case::nested) {
    return "nested at alpha=" + alpha.str() + ": " + f_at_alpha.str() + " vs " + g_at_alpha.str();
  }
  return "crossing: alpha=" + alpha.str() + " " + f_at_alpha.str() + " vs " + g_at_alpha.str() +
         "; alpha=" + beta->str() + " " + f_at_beta->str() + " vs " + g_at_beta->str();
}

std::string CompareResult::str() const {
  std::string out = symbol(relation);
  if (c_index) out += " n0=" + std::to_string(*c_index);
  if (alpha) {
    out += " alpha=" + alpha->str();
    if (index) out += " (index " + std::to_string(*index) + ")";
  }
  if (ky_witness) out += " " + ky_witness->str();
  return out;
}

namespace {

/// Endpoint differences f - g on one merged segment (a, b]: right-limits at
/// a (suffix 0) and values at b (suffix 1).
struct SegmentDiff {
  Scalar a, b;
  Scalar dl0, dl1, dr0, dr1;
};

std::vector<SegmentDiff> segment_diffs(const AlignedPair& p) {
  std::vector<SegmentDiff> out;
  out.reserve(p.segment_count());
  for (std::size_t k = 0; k < p.segment_count(); ++k) {
    const Segment& lf = p.lf.segments()[k];
    const Segment& lg = p.lg.segments()[k];
    const Segment& rf = p.rf.segments()[k];
    const Segment& rg = p.rg.segments()[k];
    out.push_back({p.knots[k], p.knots[k + 1], lf.start - lg.start, lf.end - lg.end, rf.start - rg.start,
                   rf.end - rg.end});
  }
  return out;
}

std::optional<AlphaInterval> either(const std::optional<AlphaInterval>& x, const std::optional<AlphaInterval>& y) {
  // Only one representative is needed, so any member of the union will do.
  return x ? x : y;
}

std::optional<AlphaInterval> both(const std::optional<AlphaInterval>& x, const std::optional<AlphaInterval>& y) {
  if (!x || !y) return std::nullopt;
  return intersect(*x, *y);
}

using RegionOf = std::function<std::optional<AlphaInterval>(const SegmentDiff&)>;

/// A point of the region, searching from α = 1 downward.
std::optional<Scalar> find_point(const std::vector<SegmentDiff>& diffs, const RegionOf& region) {
  for (auto it = diffs.rbegin(); it != diffs.rend(); ++it) {
    if (auto piece = region(*it)) return piece->representative();
  }
  return std::nullopt;
}

std::optional<AlphaInterval> pos(const SegmentDiff& d, const Scalar& v0, const Scalar& v1) {
  return positive_part(d.a, d.b, v0, v1);
}

// f's cut is not KM-below g's.
std::optional<AlphaInterval> f_not_km_below(const SegmentDiff& d) {
  return either(pos(d, d.dl0, d.dl1), pos(d, d.dr0, d.dr1));
}
std::optional<AlphaInterval> g_not_km_below(const SegmentDiff& d) {
  return either(pos(d, -d.dl0, -d.dl1), pos(d, -d.dr0, -d.dr1));
}
// f's cut is not inside g's.
std::optional<AlphaInterval> f_not_inside(const SegmentDiff& d) {
  return either(pos(d, -d.dl0, -d.dl1), pos(d, d.dr0, d.dr1));
}
std::optional<AlphaInterval> g_not_inside(const SegmentDiff& d) {
  return either(pos(d, d.dl0, d.dl1), pos(d, -d.dr0, -d.dr1));
}
std::optional<AlphaInterval> properly_nested(const SegmentDiff& d) {
  auto f_in_g = both(pos(d, d.dl0, d.dl1), pos(d, -d.dr0, -d.dr1));
  return f_in_g ? f_in_g : both(pos(d, -d.dl0, -d.dl1), pos(d, d.dr0, d.dr1));
}

bool nowhere(const std::vector<SegmentDiff>& diffs, const RegionOf& region) {
  for (const auto& d : diffs) {
    if (region(d)) return false;
  }
  return true;
}

Scalar difference_point(const FuzzyNumber& f, const FuzzyNumber& g) {
  const AlphaSet d = diff_region(f, g);
  return d.back().representative();
}

}  // namespace

CompareResult zadeh_compare(const FuzzyNumber& f, const FuzzyNumber& g) {
  if (f == g) return {Relation::equal, {}, {}, {}, {}};
  const auto diffs = segment_diffs(align(f, g));
  const bool f_in_g = nowhere(diffs, f_not_inside);
  const bool g_in_f = nowhere(diffs, g_not_inside);
  if (f_in_g) return {Relation::less, difference_point(f, g), {}, {}, {}};
  if (g_in_f) return {Relation::greater, difference_point(f, g), {}, {}, {}};
  return {Relation::incomparable, find_point(diffs, f_not_inside), {}, {}, {}};
}

namespace {

/// f <=_KY g, read directly off the endpoint values at every knot and
/// right-limit.
bool ky_leq(const std::vector<SegmentDiff>& diffs) {
  for (const auto& d : diffs) {
    if (d.dl0 > 0 || d.dl1 > 0 || d.dr0 > 0 || d.dr1 > 0) return false;
  }
  return true;
}

bool ky_geq(const std::vector<SegmentDiff>& diffs) {
  for (const auto& d : diffs) {
    if (d.dl0 < 0 || d.dl1 < 0 || d.dr0 < 0 || d.dr1 < 0) return false;
  }
  return true;
}

KyWitness witness_from(const FuzzyNumber& f, const FuzzyNumber& g, const std::vector<SegmentDiff>& diffs) {
  if (auto a = find_point(diffs, properly_nested)) {
    return {KyWitness::Case::nested, *a, f.alpha_cut(*a), g.alpha_cut(*a), {}, {}, {}};
  }
  const auto a = find_point(diffs, f_not_km_below);
  const auto b = find_point(diffs, g_not_km_below);
  if (!a || !b) throw std::invalid_argument("pair is Klir-Yuan comparable");
  return {KyWitness::Case::crossing, *a, f.alpha_cut(*a), g.alpha_cut(*a), *b, f.alpha_cut(*b), g.alpha_cut(*b)};
}

}  // namespace

CompareResult ky_compare(const FuzzyNumber& f, const FuzzyNumber& g) {
  if (f == g) return {Relation::equal, {}, {}, {}, {}};
  const auto diffs = segment_diffs(align(f, g));
  if (ky_leq(diffs)) return {Relation::less, difference_point(f, g), {}, {}, {}};
  if (ky_geq(diffs)) return {Relation::greater, difference_point(f, g), {}, {}, {}};
  KyWitness w = witness_from(f, g, diffs);
  return {Relation::incomparable, w.alpha, {}, {}, std::move(w)};
}

KyWitness ky_incomparability_witness(const FuzzyNumber& f, const FuzzyNumber& g) {
  if (f == g) throw std::invalid_argument("pair is Klir-Yuan comparable (equal)");
  const auto diffs = segment_diffs(align(f, g));
  if (ky_leq(diffs) || ky_geq(diffs)) throw std::invalid_argument("pair is Klir-Yuan comparable");
  return witness_from(f, g, diffs);
}

FuzzyNumber meet(const FuzzyNumber& f, const FuzzyNumber& g) {
  return FuzzyNumber(pointwise_min(f.lstar(), g.lstar()), pointwise_min(f.rstar(), g.rstar()));
}

FuzzyNumber join(const FuzzyNumber& f, const FuzzyNumber& g) {
  return FuzzyNumber(pointwise_max(f.lstar(), g.lstar()), pointwise_max(f.rstar(), g.rstar()));
}

MinAlphaResult min_alpha(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g) {
  if (f == g) return {std::nullopt, 1};
  const auto index = s.first_index_in(diff_region(f, g));
  if (!index) throw NotSeparated("sequence " + s.tag() + " does not separate the two numbers");
  return {*index, s.at(*index)};
}

Scalar ww_c(const DenseSeq& s, std::uint64_t i, const FuzzyNumber& f) {
  if (i < 1) throw std::invalid_argument("c index must be >= 1");
  if (i % 2 == 0) {
    const Interval cut = f.alpha_cut(s.at(i / 2));
    return cut.hi() - cut.lo();
  }
  const Interval cut = f.alpha_cut(s.at((i + 1) / 2));
  return cut.lo() + cut.hi();
}

CompareResult ww_compare(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g) {
  const MinAlphaResult m = min_alpha(s, f, g);
  if (!m.index) return {Relation::equal, {}, {}, {}, {}};
  // Cuts agree before α_k, so c_1 .. c_{2k-2} tie; the cuts differ at α_k,
  // so the sum or the width separates them.
  const std::uint64_t k = *m.index;
  for (std::uint64_t i : {2 * k - 1, 2 * k}) {
    const Ordering o = compare_scalars(ww_c(s, i, f), ww_c(s, i, g));
    if (o != Ordering::equal) return {to_relation(o), m.alpha, k, i, {}};
  }
  throw std::logic_error("cuts differ but neither sum nor width does");
}

CompareResult lift_compare(IntervalOrderKind kind, const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g) {
  const MinAlphaResult m = min_alpha(s, f, g);
  if (!m.index) return {Relation::equal, {}, {}, {}, {}};
  const Ordering o = total_compare(kind, f.alpha_cut(m.alpha), g.alpha_cut(m.alpha));
  return {to_relation(o), m.alpha, m.index, {}, {}};
}

}  // namespace fzo
