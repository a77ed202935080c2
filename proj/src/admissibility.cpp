#include "fuzzyorder/admissibility.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "fuzzyorder/document.hpp"

namespace fzo {

namespace {

constexpr std::size_t kChunk = 128;

std::string dump(const FuzzyNumber& f) { return to_json(f).dump(); }

struct ChunkResult {
  std::size_t checks = 0;
  std::vector<Violation> violations;
};

class ChunkRunner {
 public:
  ChunkRunner(const FuzzyOrder& order, oracle::GeneratorConfig cfg) : order_(order), gen_(cfg) {}

  void triple() {
    const auto t = gen_.triple();
    std::array<std::array<std::optional<Relation>, 3>, 3> rel{};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto ij = compare(t[i], t[j]);
        const auto ji = compare(t[j], t[i]);
        if (!ij || !ji) continue;
        rel[i][j] = *ij;
        rel[j][i] = *ji;
        pair_properties(t[i], t[j], *ij, *ji);
      }
    }
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
      const auto& xy = rel[p[0]][p[1]];
      const auto& yz = rel[p[1]][p[2]];
      const auto& xz = rel[p[0]][p[2]];
      if (!xy || !yz || !xz) continue;
      ++out_.checks;
      auto leq = [](Relation r) { return r == Relation::less || r == Relation::equal; };
      if (leq(*xy) && leq(*yz) && !leq(*xz)) {
        fail("transitivity", "x <= y <= z but x " + std::string(symbol(*xz)) + " z; x=" + dump(t[p[0]]) +
                                 " y=" + dump(t[p[1]]) + " z=" + dump(t[p[2]]));
      }
    }
  }

  void refinement() {
    const auto [f, g] = gen_.ky_pair();
    ++out_.checks;
    if (ky_compare(f, g).relation != Relation::less) {
      fail("corpus", "generated pair is not KY-ordered; f=" + dump(f) + " g=" + dump(g));
      return;
    }
    expect_less("refinement", f, g);
  }

  void no_extremes() {
    const FuzzyNumber f = gen_.fuzzy();
    expect_less("no-extremes", f.translated(-1), f);
    expect_less("no-extremes", f, f.translated(1));
  }

  ChunkResult take() { return std::move(out_); }

 private:
  std::optional<Relation> compare(const FuzzyNumber& f, const FuzzyNumber& g) {
    try {
      return order_.compare(f, g).relation;
    } catch (const NotSeparated& e) {
      fail("separation", std::string(e.what()) + "; f=" + dump(f) + " g=" + dump(g));
      return std::nullopt;
    }
  }

  void pair_properties(const FuzzyNumber& f, const FuzzyNumber& g, Relation fg, Relation gf) {
    out_.checks += 4;
    const std::string inputs = "f=" + dump(f) + " g=" + dump(g);
    if (fg == Relation::incomparable || gf == Relation::incomparable) {
      fail("totality", "order answered || for " + inputs);
    } else if (gf != reverse(fg)) {
      fail("totality", std::string("f ") + symbol(fg) + " g but g " + symbol(gf) + " f for " + inputs);
    }
    if ((fg == Relation::equal) != (f == g)) {
      fail("antisymmetry", std::string("order answered ") + symbol(fg) + (f == g ? " for equal " : " for unequal ") +
                               inputs);
    }
    const Relation ky = ky_compare(f, g).relation;
    if ((ky == Relation::less || ky == Relation::greater) && fg != ky) {
      fail("refinement", std::string("KY gives ") + symbol(ky) + " but order gives " + symbol(fg) + " for " + inputs);
    }
  }

  void expect_less(const char* property, const FuzzyNumber& f, const FuzzyNumber& g) {
    out_.checks += 2;
    const auto fg = compare(f, g);
    const auto gf = compare(g, f);
    if (!fg || !gf) return;
    if (*fg != Relation::less || *gf != Relation::greater) {
      fail(property, std::string("expected f < g, got f ") + symbol(*fg) + " g and g " + symbol(*gf) +
                         " f; f=" + dump(f) + " g=" + dump(g));
    }
  }

  void fail(std::string property, std::string detail) {
    out_.violations.push_back({std::move(property), std::move(detail)});
  }

  const FuzzyOrder& order_;
  oracle::Generator gen_;
  ChunkResult out_;
};

std::uint64_t chunk_seed(std::uint64_t seed, std::size_t chunk) {
  // splitmix64 step, so neighbouring chunks get unrelated streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (chunk + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

FuzzyPropertyReport check_admissible_fuzzy(const FuzzyOrder& order, const HarnessOptions& options) {
  if (!order.total) throw std::invalid_argument(order.name + " is not a total order; the admissibility suite needs one");
  oracle::check(options.corpus);
  const std::size_t chunks = (options.n + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      oracle::GeneratorConfig cfg = options.corpus;
      cfg.seed = chunk_seed(options.corpus.seed, c);
      ChunkRunner runner(order, cfg);
      const std::size_t begin = c * kChunk;
      const std::size_t end = std::min(options.n, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        runner.triple();
        runner.refinement();
        runner.no_extremes();
      }
      results[c] = runner.take();
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzyPropertyReport report;
  report.subject = order.name;
  for (auto& r : results) {
    report.checks += r.checks;
    for (auto& v : r.violations) {
      if (report.violations.size() < options.max_reported) {
        report.violations.push_back(std::move(v));
      } else {
        ++report.suppressed;
      }
    }
  }
  return report;
}

}  // namespace fzo
