#include "fuzzyorder/interval.hpp"

#include <array>
#include <sstream>

namespace fzo {

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw std::invalid_argument("interval endpoints out of order: [" + lo_.str() + ", " + hi_.str() + "]");
  }
}

Interval Interval::parse(std::string_view text) {
  std::size_t open = text.find('[');
  std::size_t close = text.rfind(']');
  if (open == std::string_view::npos) throw ParseError("expected '['", 0);
  if (close == std::string_view::npos || close < open) throw ParseError("expected ']'", text.size());
  for (std::size_t i = 0; i < open; ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected character", i);
  }
  for (std::size_t i = close + 1; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("unexpected character", i);
  }
  std::string_view body = text.substr(open + 1, close - open - 1);
  const std::size_t comma = body.find(',');
  auto parse_at = [&](std::string_view part, std::size_t offset) {
    try {
      return Scalar::parse(part);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), offset + e.position());
    }
  };
  if (comma == std::string_view::npos) return Interval(parse_at(body, open + 1));
  Scalar lo = parse_at(body.substr(0, comma), open + 1);
  Scalar hi = parse_at(body.substr(comma + 1), open + 2 + comma);
  if (hi < lo) throw ParseError("interval endpoints out of order", open + 1);
  return Interval(std::move(lo), std::move(hi));
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

bool km_leq(const Interval& a, const Interval& b) { return a.lo() <= b.lo() && a.hi() <= b.hi(); }

bool km_less(const Interval& a, const Interval& b) { return km_leq(a, b) && a != b; }

bool subseteq(const Interval& a, const Interval& b) { return b.lo() <= a.lo() && a.hi() <= b.hi(); }

bool strictly_contained(const Interval& a, const Interval& b) {
  return b.lo() < a.lo() && a.hi() < b.hi();
}

const char* symbol(Ordering o) {
  switch (o) {
    case Ordering::less: return "<";
    case Ordering::equal: return "=";
    case Ordering::greater: return ">";
  }
  return "?";
}

Ordering compare_scalars(const Scalar& a, const Scalar& b) {
  if (a < b) return Ordering::less;
  if (b < a) return Ordering::greater;
  return Ordering::equal;
}

std::string_view to_string(IntervalOrderKind kind) {
  switch (kind) {
    case IntervalOrderKind::lex1: return "lex1";
    case IntervalOrderKind::lex2: return "lex2";
    case IntervalOrderKind::xu_yager: return "xy";
  }
  return "?";
}

std::optional<IntervalOrderKind> parse_interval_order(std::string_view tag) {
  if (tag == "lex1") return IntervalOrderKind::lex1;
  if (tag == "lex2") return IntervalOrderKind::lex2;
  if (tag == "xy" || tag == "xu-yager" || tag == "xuyager") return IntervalOrderKind::xu_yager;
  return std::nullopt;
}

Ordering total_compare(IntervalOrderKind kind, const Interval& a, const Interval& b) {
  auto then = [](Ordering first, const Scalar& x, const Scalar& y) {
    return first != Ordering::equal ? first : compare_scalars(x, y);
  };
  switch (kind) {
    case IntervalOrderKind::lex1:
      return then(compare_scalars(a.lo(), b.lo()), a.hi(), b.hi());
    case IntervalOrderKind::lex2:
      return then(compare_scalars(a.hi(), b.hi()), a.lo(), b.lo());
    case IntervalOrderKind::xu_yager:
      // Equal sums and equal widths force equal endpoints.
      return then(compare_scalars(a.lo() + a.hi(), b.lo() + b.hi()), a.width(), b.width());
  }
  throw std::logic_error("unknown interval order");
}

namespace {

bool leq(Ordering o) { return o != Ordering::greater; }

std::string pair_text(const Interval& a, const Interval& b) { return a.str() + " vs " + b.str(); }

}  // namespace

PropertyReport check_admissible_interval(const IntervalComparator& order,
                                         const std::vector<std::pair<Interval, Interval>>& samples,
                                         std::string subject) {
  PropertyReport report;
  report.subject = std::move(subject);
  for (const auto& [a, b] : samples) {
    const Ordering ab = order(a, b);
    const Ordering ba = order(b, a);
    report.checks += 3;
    if (ab != reverse(ba)) {
      report.fail("totality", pair_text(a, b) + ": compare gives " + symbol(ab) + " one way and " +
                                  symbol(ba) + " the other");
    }
    if ((ab == Ordering::equal) != (a == b)) {
      report.fail("antisymmetry", pair_text(a, b) + ": compare gives " + symbol(ab));
    }
    if (km_less(a, b) && ab != Ordering::less) {
      report.fail("refinement", pair_text(a, b) + ": km_leq holds but compare gives " + symbol(ab));
    }
    if (km_less(b, a) && ab != Ordering::greater) {
      report.fail("refinement", pair_text(b, a) + ": km_leq holds but compare gives " + symbol(reverse(ab)));
    }
  }
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const std::array<const Interval*, 3> t{&samples[k].first, &samples[k].second, &samples[k + 1].first};
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
      const Interval& x = *t[p[0]];
      const Interval& y = *t[p[1]];
      const Interval& z = *t[p[2]];
      ++report.checks;
      if (leq(order(x, y)) && leq(order(y, z)) && !leq(order(x, z))) {
        report.fail("transitivity", x.str() + " <= " + y.str() + " <= " + z.str() + " but not " +
                                        x.str() + " <= " + z.str());
      }
    }
  }
  return report;
}

PropertyReport check_admissible_interval(IntervalOrderKind kind,
                                         const std::vector<std::pair<Interval, Interval>>& samples) {
  return check_admissible_interval(
      [kind](const Interval& a, const Interval& b) { return total_compare(kind, a, b); }, samples,
      std::string(to_string(kind)));
}

}  // namespace fzo
