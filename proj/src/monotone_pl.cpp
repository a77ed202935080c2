#include "fuzzyorder/monotone_pl.hpp"

#include <algorithm>
#include <stdexcept>

namespace fzo {

MonotonePL::MonotonePL(Direction dir, std::vector<Scalar> knots, std::vector<Segment> segments)
    : dir_(dir), knots_(std::move(knots)), segs_(std::move(segments)) {
  if (knots_.size() < 2) throw std::invalid_argument("need at least the knots 0 and 1");
  if (knots_.front() != 0 || knots_.back() != 1) {
    throw std::invalid_argument("knots must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k - 1] < knots_[k])) {
      throw std::invalid_argument("knots must be strictly increasing (knot " + std::to_string(k) + ")");
    }
  }
  if (segs_.size() + 1 != knots_.size()) {
    throw std::invalid_argument("expected " + std::to_string(knots_.size() - 1) + " segments, got " +
                                std::to_string(segs_.size()));
  }
}

MonotonePL MonotonePL::constant(Direction dir, const Scalar& value) {
  return MonotonePL(dir, {0, 1}, {{value, value}});
}

MonotonePL MonotonePL::linear(Direction dir, const Scalar& at_zero, const Scalar& at_one) {
  return MonotonePL(dir, {0, 1}, {{at_zero, at_one}});
}

Scalar interpolate(const Scalar& a, const Scalar& b, const Segment& seg, const Scalar& t) {
  if (seg.start == seg.end) return seg.start;
  return seg.start + (seg.end - seg.start) * ((t - a) / (b - a));
}

Scalar MonotonePL::operator()(const Scalar& alpha) const {
  if (alpha < 0 || alpha > 1) throw std::out_of_range("alpha outside [0, 1]: " + alpha.str());
  if (alpha == 0) return segs_.front().start;
  // First knot >= alpha closes the segment that contains alpha.
  const auto it = std::lower_bound(knots_.begin() + 1, knots_.end(), alpha);
  const auto k = static_cast<std::size_t>(it - knots_.begin());
  return interpolate(knots_[k - 1], knots_[k], segs_[k - 1], alpha);
}

Scalar MonotonePL::right_limit(const Scalar& alpha) const {
  if (alpha < 0 || alpha >= 1) throw std::out_of_range("right limit needs alpha in [0, 1): " + alpha.str());
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), alpha);
  const auto k = static_cast<std::size_t>(it - knots_.begin());
  return interpolate(knots_[k - 1], knots_[k], segs_[k - 1], alpha);
}

std::vector<std::string> MonotonePL::monotonicity_violations() const {
  std::vector<std::string> out;
  const bool inc = dir_ == Direction::increasing;
  auto bad = [inc](const Scalar& earlier, const Scalar& later) { return inc ? later < earlier : earlier < later; };
  for (std::size_t k = 0; k < segs_.size(); ++k) {
    if (bad(segs_[k].start, segs_[k].end)) {
      out.push_back(std::string(inc ? "decreases" : "increases") + " on segment (" + knots_[k].str() + ", " +
                    knots_[k + 1].str() + "]: " + segs_[k].start.str() + " -> " + segs_[k].end.str());
    }
    if (k + 1 < segs_.size() && bad(segs_[k].end, segs_[k + 1].start)) {
      out.push_back(std::string(inc ? "jumps down" : "jumps up") + " at knot " + knots_[k + 1].str() + ": " +
                    segs_[k].end.str() + " -> " + segs_[k + 1].start.str());
    }
  }
  return out;
}

MonotonePL MonotonePL::canonical() const {
  std::vector<Scalar> knots{knots_.front()};
  std::vector<Segment> segs{segs_.front()};
  for (std::size_t k = 1; k < segs_.size(); ++k) {
    Segment& last = segs.back();
    const Segment& next = segs_[k];
    // Candidate merge of (knots.back(), knots_[k]] with (knots_[k], knots_[k+1]].
    const Scalar& a = knots.back();
    const Scalar& m = knots_[k];
    const Scalar& b = knots_[k + 1];
    const bool continuous = last.end == next.start;
    const bool collinear = (last.end - last.start) * (b - m) == (next.end - next.start) * (m - a);
    if (continuous && collinear) {
      last.end = next.end;
    } else {
      knots.push_back(m);
      segs.push_back(next);
    }
  }
  knots.push_back(knots_.back());
  return MonotonePL(dir_, std::move(knots), std::move(segs));
}

MonotonePL MonotonePL::refined(std::span<const Scalar> extra) const {
  std::vector<Scalar> knots = merge_knots(knots_, extra);
  if (knots.size() == knots_.size()) return *this;
  if (knots.front() != 0 || knots.back() != 1) throw std::invalid_argument("refinement knots outside [0, 1]");
  std::vector<Segment> segs;
  segs.reserve(knots.size() - 1);
  std::size_t src = 1;  // knots_[src] closes the source segment in use
  for (std::size_t k = 1; k < knots.size(); ++k) {
    while (knots_[src] < knots[k]) ++src;
    const Segment& s = segs_[src - 1];
    const Scalar& a = knots_[src - 1];
    const Scalar& b = knots_[src];
    // An inserted knot is interior to s, where the function is continuous.
    Scalar start = knots[k - 1] == a ? s.start : segs.back().end;
    Scalar end = knots[k] == b ? s.end : interpolate(a, b, s, knots[k]);
    segs.push_back({std::move(start), std::move(end)});
  }
  return MonotonePL(dir_, std::move(knots), std::move(segs));
}

MonotonePL MonotonePL::translated(const Scalar& delta) const {
  std::vector<Segment> segs = segs_;
  for (auto& s : segs) {
    s.start += delta;
    s.end += delta;
  }
  return MonotonePL(dir_, knots_, std::move(segs));
}

MonotonePL MonotonePL::negated() const {
  std::vector<Segment> segs = segs_;
  for (auto& s : segs) {
    s.start = -s.start;
    s.end = -s.end;
  }
  return MonotonePL(dir_ == Direction::increasing ? Direction::decreasing : Direction::increasing, knots_,
                    std::move(segs));
}

std::vector<Scalar> merge_knots(std::span<const Scalar> a, std::span<const Scalar> b) {
  std::vector<Scalar> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename Pick>
MonotonePL combine(const MonotonePL& f, const MonotonePL& g, Pick pick) {
  if (f.direction() != g.direction()) throw std::invalid_argument("direction mismatch");
  const std::vector<Scalar> knots = merge_knots(f.knots(), g.knots());
  const MonotonePL rf = f.refined(knots);
  const MonotonePL rg = g.refined(knots);
  std::vector<Scalar> out_knots{knots.front()};
  std::vector<Segment> out_segs;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const Scalar& a = knots[k];
    const Scalar& b = knots[k + 1];
    const Segment& p = rf.segments()[k];
    const Segment& q = rg.segments()[k];
    const Scalar d0 = p.start - q.start;
    const Scalar d1 = p.end - q.end;
    if (d0.sign() * d1.sign() < 0) {
      // Strict crossing inside (a, b): split there so each half has one winner.
      const Scalar t = d0 / (d0 - d1);
      const Scalar c = a + t * (b - a);
      const Scalar vc = p.start + t * (p.end - p.start);
      out_segs.push_back({pick(p.start, q.start), vc});
      out_knots.push_back(c);
      out_segs.push_back({vc, pick(p.end, q.end)});
    } else {
      out_segs.push_back({pick(p.start, q.start), pick(p.end, q.end)});
    }
    out_knots.push_back(b);
  }
  return MonotonePL(f.direction(), std::move(out_knots), std::move(out_segs)).canonical();
}

}  // namespace

MonotonePL pointwise_min(const MonotonePL& f, const MonotonePL& g) {
  return combine(f, g, [](const Scalar& x, const Scalar& y) { return min(x, y); });
}

MonotonePL pointwise_max(const MonotonePL& f, const MonotonePL& g) {
  return combine(f, g, [](const Scalar& x, const Scalar& y) { return max(x, y); });
}

MonotonePL pointwise_sum(const MonotonePL& f, const MonotonePL& g) {
  if (f.direction() != g.direction()) throw std::invalid_argument("direction mismatch");
  const std::vector<Scalar> knots = merge_knots(f.knots(), g.knots());
  const MonotonePL rf = f.refined(knots);
  const MonotonePL rg = g.refined(knots);
  std::vector<Segment> segs;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    segs.push_back({rf.segments()[k].start + rg.segments()[k].start, rf.segments()[k].end + rg.segments()[k].end});
  }
  return MonotonePL(f.direction(), knots, std::move(segs)).canonical();
}

}  // namespace fzo
