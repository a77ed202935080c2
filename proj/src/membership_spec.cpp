#include "fuzzyorder/membership_spec.hpp"

#include <algorithm>

namespace fzo {

namespace {

Scalar line_at(const LinearPiece& p, const Scalar& x) {
  if (p.y_from == p.y_to) return p.y_from;
  return p.y_from + (p.y_to - p.y_from) * ((x - p.x_from) / (p.x_to - p.x_from));
}

/// Right side mirrored through x -> -x becomes a left side.
std::vector<LinearPiece> mirror(const std::vector<LinearPiece>& right) {
  std::vector<LinearPiece> out;
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    out.push_back({-it->x_to, -it->x_from, it->y_to, it->y_from});
  }
  return out;
}

/// l*(α) = inf{x : l(x) >= α} for an increasing right-continuous left side
/// that reaches 1 at `kernel_lo`.
MonotonePL invert_left(const std::vector<LinearPiece>& pieces, const Scalar& kernel_lo) {
  if (pieces.empty()) return MonotonePL::constant(Direction::increasing, kernel_lo);
  std::vector<Scalar> knots{0};
  std::vector<Segment> segs;
  Scalar level = 0;
  for (const auto& p : pieces) {
    // Levels skipped by a jump of l map to the jump position.
    if (p.y_from > level) {
      segs.push_back({p.x_from, p.x_from});
      knots.push_back(p.y_from);
      level = p.y_from;
    }
    // A rising piece inverts linearly; a flat piece becomes a jump of l*.
    if (p.y_to > p.y_from) {
      segs.push_back({p.x_from, p.x_to});
      knots.push_back(p.y_to);
      level = p.y_to;
    }
  }
  if (level < 1) {
    segs.push_back({kernel_lo, kernel_lo});
    knots.push_back(1);
  }
  return MonotonePL(Direction::increasing, std::move(knots), std::move(segs));
}

void check_side(const std::vector<LinearPiece>& pieces, const Scalar& anchor, bool left, const Scalar& height,
                std::vector<std::string>& out) {
  const std::string side = left ? "left" : "right";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const LinearPiece& p = pieces[i];
    const std::string where = side + " piece " + std::to_string(i);
    if (!(p.x_from < p.x_to)) out.push_back(where + ": x_from must be below x_to");
    for (const Scalar* y : {&p.y_from, &p.y_to}) {
      if (*y < 0 || *y > height) out.push_back(where + ": value " + y->str() + " outside [0, height]");
    }
    // Values attained outside the kernel stay below the height.
    const Scalar& attained = left ? p.y_from : p.y_to;
    if (attained >= height) out.push_back(where + ": attains the height outside the kernel");
    if (left ? p.y_to < p.y_from : p.y_to > p.y_from) {
      out.push_back(where + (left ? ": decreasing on the left side" : ": increasing on the right side"));
    }
    if (i + 1 < pieces.size()) {
      const LinearPiece& q = pieces[i + 1];
      if (p.x_to != q.x_from) out.push_back(where + ": gap or overlap before the next piece");
      if (left ? q.y_from < p.y_to : q.y_from > p.y_to) {
        out.push_back(where + (left ? ": jumps down into the next piece" : ": jumps up into the next piece"));
      }
    }
  }
  if (!pieces.empty()) {
    const Scalar& touching = left ? pieces.back().x_to : pieces.front().x_from;
    if (touching != anchor) out.push_back(side + " side must meet the kernel at " + anchor.str());
  }
}

}  // namespace

Scalar MembershipSpec::operator()(const Scalar& x) const {
  if (kernel.contains(x)) return height;
  if (x < kernel.lo()) {
    for (const auto& p : left) {
      if (p.x_from <= x && x < p.x_to) return line_at(p, x);
    }
    return 0;
  }
  for (const auto& p : right) {
    if (p.x_from < x && x <= p.x_to) return line_at(p, x);
  }
  return 0;
}

std::vector<std::string> MembershipSpec::problems() const {
  std::vector<std::string> out;
  if (height <= 0 || height > 1) out.push_back("height must lie in (0, 1]");
  check_side(left, kernel.lo(), true, height, out);
  check_side(right, kernel.hi(), false, height, out);
  return out;
}

MembershipSpec MembershipSpec::normalized() const {
  if (height == 0) throw std::invalid_argument("cannot normalize a spec of height 0");
  MembershipSpec out = *this;
  for (auto* side : {&out.left, &out.right}) {
    for (auto& p : *side) {
      p.y_from /= height;
      p.y_to /= height;
    }
  }
  out.height = 1;
  return out;
}

std::vector<Scalar> MembershipSpec::breakpoints() const {
  std::vector<Scalar> xs{kernel.lo(), kernel.hi()};
  for (const auto* side : {&left, &right}) {
    for (const auto& p : *side) {
      xs.push_back(p.x_from);
      xs.push_back(p.x_to);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

FuzzyNumber from_membership(const MembershipSpec& spec) {
  std::vector<Violation> violations;
  for (auto& p : spec.problems()) violations.push_back({"membership spec", std::move(p)});
  if (violations.empty() && spec.height != 1) {
    violations.push_back({"subnormal", "height " + spec.height.str() +
                                           " is below 1; normalize the spec first (divide by the height)"});
  }
  if (!violations.empty()) throw InvalidFuzzyNumber(std::move(violations));
  MonotonePL lstar = invert_left(spec.left, spec.kernel.lo());
  MonotonePL rstar = invert_left(mirror(spec.right), -spec.kernel.hi()).negated();
  return FuzzyNumber(lstar, rstar);
}

}  // namespace fzo
