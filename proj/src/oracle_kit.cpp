#include "fuzzyorder/oracle_kit.hpp"

#include <algorithm>

namespace fzo::oracle {

void check(const GeneratorConfig& cfg) {
  if (cfg.max_knots < 1) throw std::invalid_argument("max_knots must be >= 1");
  if (cfg.coordinate_bound <= 0) throw std::invalid_argument("coordinate_bound must be positive");
  if (cfg.jump_probability < 0 || cfg.jump_probability > 1) {
    throw std::invalid_argument("jump_probability must lie in [0, 1]");
  }
}

Generator::Generator(const GeneratorConfig& cfg) : cfg_(cfg), unit_(cfg.coordinate_bound / 16), rng_(cfg.seed) {
  check(cfg);
}

std::uint64_t Generator::below(std::uint64_t n) { return n <= 1 ? 0 : rng_() % n; }

bool Generator::chance(const Scalar& p) {
  // Compare against a 2^-20 resolution draw; exact for the dyadic p in use.
  const Scalar draw = Scalar(static_cast<long>(below(std::uint64_t{1} << 20))) / pow2(20);
  return draw < p;
}

std::vector<Scalar> Generator::knots() {
  const std::uint64_t segments = 1 + below(cfg_.max_knots);
  std::vector<long> picks;
  while (picks.size() + 1 < segments) {
    const long k = 1 + static_cast<long>(below(23));
    if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
    if (picks.size() == 23) break;
  }
  std::sort(picks.begin(), picks.end());
  std::vector<Scalar> out{0};
  for (long k : picks) out.push_back(Scalar(k, 24));
  out.push_back(1);
  return out;
}

MonotonePL Generator::rising() {
  std::vector<Scalar> ks = knots();
  std::vector<Segment> segs;
  Scalar level = 0;
  for (std::size_t k = 0; k + 1 < ks.size(); ++k) {
    if (k > 0 && chance(cfg_.jump_probability)) level += unit_ * static_cast<long>(1 + below(4));
    const Scalar start = level;
    level += unit_ * static_cast<long>(below(5));
    segs.push_back({start, level});
  }
  return MonotonePL(Direction::increasing, std::move(ks), std::move(segs));
}

MonotonePL Generator::falling(bool positive_at_zero) {
  // h rising from 0 to H gives c + H - h falling from c + H to c.
  const MonotonePL h = rising();
  Scalar c = unit_ * static_cast<long>(below(3));
  const Scalar top = h(1);
  if (positive_at_zero && c == 0 && top == 0) c = unit_;
  return h.negated().translated(c + top);
}

FuzzyNumber Generator::fuzzy() {
  const MonotonePL l = rising();
  const Scalar a = unit_ * static_cast<long>(below(33)) - unit_ * 16;
  const Scalar b = a + unit_ * static_cast<long>(below(5));
  const MonotonePL r = falling(false);
  return FuzzyNumber(l.translated(a - l(1)), r.translated(b - r(1)));
}

FuzzyNumber shifted(const FuzzyNumber& f, const MonotonePL& left_shift, const MonotonePL& right_shift) {
  return FuzzyNumber(pointwise_sum(f.lstar(), left_shift), pointwise_sum(f.rstar(), right_shift));
}

std::pair<FuzzyNumber, FuzzyNumber> Generator::ky_pair() {
  FuzzyNumber f = fuzzy();
  for (int attempt = 0; attempt < 32; ++attempt) {
    MonotonePL sl = rising();
    if (chance(Scalar(1, 2))) sl = sl.translated(unit_ * static_cast<long>(below(3)));
    MonotonePL sr = falling(false);
    // Lift the right shift just enough that the kernel stays ordered.
    const Scalar overlap = f.lstar()(1) + sl(1) - f.rstar()(1) - sr(1);
    if (overlap > 0) sr = sr.translated(overlap);
    const bool zero_l = sl.knots().size() == 2 && sl.segments()[0] == Segment{0, 0};
    const bool zero_r = sr.knots().size() == 2 && sr.segments()[0] == Segment{0, 0};
    if (zero_l && zero_r) continue;
    FuzzyNumber g = shifted(f, sl.canonical(), sr.canonical());
    if (g != f) return {f, g};
  }
  return {f, f.translated(unit_)};
}

std::pair<FuzzyNumber, FuzzyNumber> Generator::crossing_pair() {
  const bool swap = chance(Scalar(1, 2));
  auto ordered = [swap](FuzzyNumber a, FuzzyNumber b) {
    return swap ? std::pair{std::move(b), std::move(a)} : std::pair{std::move(a), std::move(b)};
  };
  if (chance(Scalar(1, 2))) {
    // Nesting: widen both sides, strictly near α = 0.
    FuzzyNumber f = fuzzy();
    const MonotonePL sl = falling(true);
    const MonotonePL sr = falling(true);
    FuzzyNumber g(pointwise_sum(f.lstar(), sl.negated()), pointwise_sum(f.rstar(), sr));
    return ordered(std::move(f), std::move(g));
  }
  // Reversal: g's kernel sits left of f's, g's support base right of f's.
  for (;;) {
    FuzzyNumber f = fuzzy();
    const Scalar l0 = f.lstar()(0);
    const Scalar l1 = f.lstar()(1);
    const Scalar spread = l1 - l0;
    if (spread < unit_ * 2) continue;
    const Scalar d = spread * Scalar(static_cast<long>(1 + below(3)), 8);
    const Scalar e = spread * Scalar(static_cast<long>(1 + below(3)), 8);
    FuzzyNumber g(MonotonePL::linear(Direction::increasing, l0 + e, l1 - d),
                  MonotonePL::linear(Direction::decreasing, f.rstar()(0) + e, f.rstar()(1) - d));
    return ordered(std::move(f), std::move(g));
  }
}

std::array<FuzzyNumber, 3> Generator::triple() {
  switch (below(3)) {
    case 0:
      return {fuzzy(), fuzzy(), fuzzy()};
    case 1: {
      // Lattice combinations share whole stretches of cuts with their inputs.
      FuzzyNumber f = fuzzy();
      auto mix = [this](const FuzzyNumber& x) {
        const FuzzyNumber y = fuzzy();
        return chance(Scalar(1, 2)) ? meet(x, y) : join(x, y);
      };
      FuzzyNumber g = mix(f);
      FuzzyNumber h = mix(chance(Scalar(1, 2)) ? f : g);
      return {std::move(f), std::move(g), std::move(h)};
    }
    default: {
      // f <=_KY h <=_KY g by distributivity.
      auto [f, g] = ky_pair();
      FuzzyNumber h = join(f, meet(g, fuzzy()));
      return {std::move(f), std::move(g), std::move(h)};
    }
  }
}

FuzzyNumber random_fuzzy(const GeneratorConfig& cfg) { return Generator(cfg).fuzzy(); }

std::pair<FuzzyNumber, FuzzyNumber> random_ky_pair(const GeneratorConfig& cfg) { return Generator(cfg).ky_pair(); }

std::pair<FuzzyNumber, FuzzyNumber> random_crossing_pair(const GeneratorConfig& cfg) {
  return Generator(cfg).crossing_pair();
}

namespace {

// Values of f at j / 2^levels for j = 0 .. 2^levels, one sweep per segment.
std::vector<Scalar> sample_on_grid(const MonotonePL& f, unsigned levels) {
  const std::uint64_t n = dyadic_count_through_level(levels);
  const Scalar h(mpq_class(mpz_class(1), mpz_class(std::to_string(n))));
  std::vector<Scalar> out(n + 1);
  out[0] = f(0);
  const auto& knots = f.knots();
  const auto& segs = f.segments();
  std::uint64_t j = 1;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Scalar& a = knots[k];
    const Scalar& b = knots[k + 1];
    const Scalar slope = (segs[k].end - segs[k].start) / (b - a);
    const Scalar step = slope * h;
    const std::uint64_t last = floor(b / h).get_ui();
    if (j > last) continue;
    Scalar v = segs[k].start + slope * (Scalar(static_cast<long long>(j)) * h - a);
    for (; j <= last; ++j, v += step) out[j] = v;
  }
  return out;
}

}  // namespace

CompareResult sampled_ky(const FuzzyNumber& f, const FuzzyNumber& g, unsigned levels) {
  if (levels < 1 || levels > 24) throw std::invalid_argument("levels must lie in 1 .. 24");
  const std::vector<Scalar> lf = sample_on_grid(f.lstar(), levels), rf = sample_on_grid(f.rstar(), levels);
  const std::vector<Scalar> lg = sample_on_grid(g.lstar(), levels), rg = sample_on_grid(g.rstar(), levels);
  const std::uint64_t n = lf.size() - 1;
  bool leq = true;
  bool geq = true;
  std::optional<std::uint64_t> first_diff;
  auto visit = [&](std::uint64_t j) {
    if (lf[j] == lg[j] && rf[j] == rg[j]) return;
    if (!first_diff) first_diff = j;
    if (!(lf[j] <= lg[j] && rf[j] <= rg[j])) leq = false;
    if (!(lg[j] <= lf[j] && rg[j] <= rf[j])) geq = false;
  };
  // Enumeration order: 1, then each level's odd multiples, then 0.
  visit(n);
  for (unsigned k = 1; k <= levels; ++k) {
    const std::uint64_t stride = n >> k;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); m += 2) visit(m * stride);
  }
  visit(0);
  if (!first_diff) return {Relation::equal, {}, {}, {}, {}};
  const Scalar alpha(mpq_class(mpz_class(std::to_string(*first_diff)), mpz_class(std::to_string(n))));
  if (leq) return {Relation::less, alpha, {}, {}, {}};
  if (geq) return {Relation::greater, alpha, {}, {}, {}};
  return {Relation::incomparable, alpha, {}, {}, {}};
}

Scalar sampled_membership_sup(const FuzzyNumber& f, const Scalar& x, unsigned levels) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  Scalar best = 0;
  const std::uint64_t count = dyadic_count_through_level(levels);
  for (std::uint64_t i = 1; i <= count; ++i) {
    const Scalar a = dyadic(i);
    if (a > best && f.alpha_cut(a).contains(x)) best = a;
  }
  return best;
}

std::optional<std::uint64_t> scan_first_difference(const DenseSeq& s, const FuzzyNumber& f, const FuzzyNumber& g,
                                                   std::uint64_t limit) {
  const std::uint64_t end = s.finite() ? std::min(limit, s.size()) : limit;
  for (std::uint64_t i = 1; i <= end; ++i) {
    const Scalar a = s.at(i);
    if (f.alpha_cut(a) != g.alpha_cut(a)) return i;
  }
  return std::nullopt;
}

Scalar meet_membership(const FuzzyNumber& f, const FuzzyNumber& g, const Scalar& x) {
  // min(y, z) = x means y = x and z >= x, or z = x and y >= x.
  auto sup_from = [&x](const FuzzyNumber& h) { return x <= h.kernel().hi() ? Scalar(1) : h.membership(x); };
  return max(min(f.membership(x), sup_from(g)), min(sup_from(f), g.membership(x)));
}

Scalar join_membership(const FuzzyNumber& f, const FuzzyNumber& g, const Scalar& x) {
  auto sup_upto = [&x](const FuzzyNumber& h) { return x >= h.kernel().lo() ? Scalar(1) : h.membership(x); };
  return max(min(f.membership(x), sup_upto(g)), min(sup_upto(f), g.membership(x)));
}

std::vector<Scalar> membership_grid(const FuzzyNumber& f, const FuzzyNumber& g) {
  std::vector<Scalar> xs = f.membership_breakpoints();
  const std::vector<Scalar> ys = g.membership_breakpoints();
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back(xs[i]);
    if (i + 1 < xs.size()) out.push_back((xs[i] + xs[i + 1]) / 2);
  }
  return out;
}

bool membership_dominated(const FuzzyNumber& f, const FuzzyNumber& g) {
  auto gap = [&](const Scalar& x) { return f.membership(x) - g.membership(x); };
  std::vector<Scalar> xs = f.membership_breakpoints();
  const std::vector<Scalar> ys = g.membership_breakpoints();
  xs.insert(xs.end(), ys.begin(), ys.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (gap(xs[i]) > 0) return false;
    if (i + 1 == xs.size()) break;
    // Both memberships are affine strictly between breakpoints: sample at
    // the thirds and extrapolate to both one-sided limits.
    const Scalar step = (xs[i + 1] - xs[i]) / 3;
    const Scalar d1 = gap(xs[i] + step);
    const Scalar d2 = gap(xs[i] + step * 2);
    if (d1 > 0 || d2 > 0 || d1 * 2 - d2 > 0 || d2 * 2 - d1 > 0) return false;
    if (gap((xs[i] + xs[i + 1]) / 2) > 0) return false;
  }
  return true;
}

}  // namespace fzo::oracle
