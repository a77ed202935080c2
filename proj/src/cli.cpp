#include "fuzzyorder/cli.hpp"

#include <algorithm>
#include <chrono>

#include <CLI11.hpp>

#include "fuzzyorder/admissibility.hpp"
#include "fuzzyorder/document.hpp"
#include "fuzzyorder/selector.hpp"

namespace fzo::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  int decimal = -1;

  std::vector<std::string> files;
  std::string file;
  std::string file_b;
  std::string selector;
  std::vector<std::string> alphas;
  int levels = -1;
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  unsigned max_knots = 4;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int validate();
  int cut();
  int table();
  int compare();
  int sort();
  int properties();

 private:
  std::string render(const Scalar& s) const { return opt_.decimal >= 0 ? s.decimal(opt_.decimal) : s.str(); }
  std::string render(const Interval& i) const { return "[" + render(i.lo()) + ", " + render(i.hi()) + "]"; }
  json scalar_json(const Scalar& s) const { return render(s); }
  json interval_json(const Interval& i) const { return json::array({render(i.lo()), render(i.hi())}); }

  FuzzyNumber load(const std::string& path) const { return parse_fuzzy(read_json_file(path)); }
  json describe(const CompareResult& r) const;
  std::string witness_text(const CompareResult& r) const;
  int table_rows(const FuzzyNumber& f, const std::vector<Scalar>& alphas);

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

int Runner::validate() {
  int worst = kOk;
  json report = json::array();
  for (const auto& path : opt_.files) {
    json entry{{"file", path}};
    try {
      const auto violations = fzo::validate(parse_envelope(read_json_file(path)));
      entry["valid"] = violations.empty();
      entry["violations"] = json::array();
      for (const auto& v : violations) entry["violations"].push_back({{"condition", v.property}, {"detail", v.detail}});
      if (!opt_.json_output) {
        out_ << path << ": " << (violations.empty() ? "ok" : "invalid") << "\n";
        for (const auto& v : violations) out_ << "  " << v.property << ": " << v.detail << "\n";
      }
      if (!violations.empty()) worst = std::max(worst, int{kFailure});
    } catch (const InvalidFuzzyNumber& e) {
      entry["valid"] = false;
      entry["violations"] = json::array();
      for (const auto& v : e.violations()) {
        entry["violations"].push_back({{"condition", v.property}, {"detail", v.detail}});
      }
      if (!opt_.json_output) {
        out_ << path << ": invalid\n";
        for (const auto& v : e.violations()) out_ << "  " << v.property << ": " << v.detail << "\n";
      }
      worst = std::max(worst, int{kFailure});
    } catch (const DocumentError& e) {
      entry["valid"] = false;
      entry["parse_error"] = e.what();
      if (!opt_.json_output) out_ << path << ": parse error: " << e.what() << "\n";
      worst = kUsage;
    }
    report.push_back(entry);
  }
  if (opt_.json_output) out_ << report.dump(2) << "\n";
  return worst;
}

int Runner::table_rows(const FuzzyNumber& f, const std::vector<Scalar>& alphas) {
  json rows = json::array();
  for (const auto& a : alphas) {
    if (a < 0 || a > 1) {
      err_ << "error: alpha " << a << " outside [0, 1]\n";
      return kUsage;
    }
  }
  for (const auto& a : alphas) {
    const Interval cut = f.alpha_cut(a);
    if (opt_.json_output) {
      rows.push_back({{"alpha", scalar_json(a)}, {"cut", interval_json(cut)}});
    } else {
      out_ << render(a) << " → " << render(cut) << "\n";
    }
  }
  if (opt_.json_output) out_ << rows.dump(2) << "\n";
  return kOk;
}

std::vector<Scalar> parse_alphas(const std::vector<std::string>& texts) {
  std::vector<Scalar> out;
  for (const auto& t : texts) out.push_back(Scalar::parse(t));
  return out;
}

int Runner::cut() {
  if (opt_.alphas.empty()) {
    err_ << "error: cut needs --alpha\n";
    return kUsage;
  }
  return table_rows(load(opt_.file), parse_alphas(opt_.alphas));
}

int Runner::table() {
  const FuzzyNumber f = load(opt_.file);
  std::vector<Scalar> alphas = parse_alphas(opt_.alphas);
  if (opt_.levels >= 0) {
    if (opt_.levels > 20) {
      err_ << "error: --levels is capped at 20\n";
      return kUsage;
    }
    const std::uint64_t count = dyadic_count_through_level(static_cast<unsigned>(opt_.levels));
    for (std::uint64_t i = 1; i <= count; ++i) alphas.push_back(dyadic(i));
  }
  if (alphas.empty()) {
    // Default: every knot of either envelope, top down.
    alphas = f.knots();
    std::reverse(alphas.begin(), alphas.end());
  }
  return table_rows(f, alphas);
}

std::string Runner::witness_text(const CompareResult& r) const {
  std::string out;
  if (r.ky_witness) {
    const KyWitness& w = *r.ky_witness;
    if (w.kind == KyWitness::Case::nested) {
      return "nested at alpha=" + render(w.alpha) + ": " + render(w.f_at_alpha) + " vs " + render(w.g_at_alpha);
    }
    return "crossing at alpha=" + render(w.alpha) + ": " + render(w.f_at_alpha) + " vs " + render(w.g_at_alpha) +
           "; at alpha=" + render(*w.beta) + ": " + render(*w.f_at_beta) + " vs " + render(*w.g_at_beta);
  }
  if (r.c_index) out += "n0=" + std::to_string(*r.c_index) + " ";
  if (r.alpha) {
    out += (r.index ? "alpha_m=" : "alpha=") + render(*r.alpha);
    if (r.index) out += " index=" + std::to_string(*r.index);
  }
  return out;
}

json Runner::describe(const CompareResult& r) const {
  json j{{"relation", symbol(r.relation)}};
  if (r.alpha) j["alpha"] = scalar_json(*r.alpha);
  if (r.index) j["index"] = *r.index;
  if (r.c_index) j["n0"] = *r.c_index;
  if (r.ky_witness) {
    const KyWitness& w = *r.ky_witness;
    json wj{{"case", w.kind == KyWitness::Case::nested ? "nested" : "crossing"},
            {"alpha", scalar_json(w.alpha)},
            {"f_cut", interval_json(w.f_at_alpha)},
            {"g_cut", interval_json(w.g_at_alpha)}};
    if (w.beta) {
      wj["beta"] = scalar_json(*w.beta);
      wj["f_cut_beta"] = interval_json(*w.f_at_beta);
      wj["g_cut_beta"] = interval_json(*w.g_at_beta);
    }
    j["witness"] = wj;
  }
  return j;
}

int Runner::compare() {
  const FuzzyOrder order = parse_order(opt_.selector);
  const FuzzyNumber a = load(opt_.file);
  const FuzzyNumber b = load(opt_.file_b);
  CompareResult r{};
  try {
    r = order.compare(a, b);
  } catch (const NotSeparated& e) {
    err_ << "not-separated: " << e.what() << "\n";
    return kFailure;
  }
  if (opt_.json_output) {
    json j = describe(r);
    j["order"] = order.name;
    out_ << j.dump(2) << "\n";
  } else {
    const std::string w = witness_text(r);
    out_ << symbol(r.relation) << (w.empty() ? "" : "  " + w) << "\n";
  }
  return kOk;
}

int Runner::sort() {
  const FuzzyOrder order = parse_order(opt_.selector);
  if (!order.total) {
    err_ << "error: " << order.name << " is a partial order; sort needs a total order (ww:* or lift:*)\n";
    return kUsage;
  }
  std::vector<LabeledNumber> items = parse_list(read_json_file(opt_.file));
  try {
    std::stable_sort(items.begin(), items.end(), [&order](const LabeledNumber& x, const LabeledNumber& y) {
      return order.compare(x.number, y.number).relation == Relation::less;
    });
  } catch (const NotSeparated& e) {
    err_ << "not-separated: " << e.what() << "\n";
    return kFailure;
  }
  if (opt_.json_output) {
    json arr = json::array();
    for (const auto& it : items) arr.push_back({{"label", it.label}, {"number", to_json(it.number)}});
    out_ << arr.dump(2) << "\n";
  } else {
    for (const auto& it : items) out_ << it.label << "\n";
  }
  return kOk;
}

int Runner::properties() {
  const FuzzyOrder order = parse_order(opt_.selector);
  if (!order.total) {
    err_ << "error: " << order.name
         << " is not a total order; the properties suite checks admissible total orders (ww:* or lift:*)\n";
    return kUsage;
  }
  HarnessOptions h;
  h.n = opt_.n;
  h.corpus.seed = opt_.seed;
  h.corpus.max_knots = opt_.max_knots;
  h.threads = opt_.threads;
  const auto start = std::chrono::steady_clock::now();
  const FuzzyPropertyReport report = check_admissible_fuzzy(order, h);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt_.json_output) {
    json j{{"order", report.subject}, {"n", opt_.n}, {"seed", opt_.seed}, {"checks", report.checks},
           {"violations", report.total_violations()}, {"reported", json::array()}};
    for (const auto& v : report.violations) j["reported"].push_back({{"property", v.property}, {"detail", v.detail}});
    out_ << j.dump(2) << "\n";
  } else {
    out_ << report.subject << ": " << report.checks << " checks, " << report.total_violations() << " violations ("
         << "n=" << opt_.n << ", seed=" << opt_.seed << ", " << seconds << " s)\n";
    for (const auto& v : report.violations) out_ << "  " << v.property << ": " << v.detail << "\n";
    if (report.suppressed) out_ << "  ... " << report.suppressed << " more\n";
  }
  return report.total_violations() == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact orders on piecewise-linear fuzzy numbers", "fuzzyorder"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_flag("--json", opt.json_output, "Emit machine-readable JSON");
  app.add_option("--decimal", opt.decimal, "Render rationals as decimals with this many digits")
      ->check(CLI::Range(0, 60));

  auto* validate = app.add_subcommand("validate", "Check fuzzy-number documents");
  validate->add_option("files", opt.files, "Documents")->required();

  auto* cut = app.add_subcommand("cut", "Print the alpha-cut at given levels");
  cut->add_option("file", opt.file, "Document")->required();
  cut->add_option("--alpha", opt.alphas, "Alpha level (repeatable)");

  auto* table = app.add_subcommand("table", "Print an alpha-cut table");
  table->add_option("file", opt.file, "Document")->required();
  table->add_option("--alpha", opt.alphas, "Alpha level (repeatable)");
  table->add_option("--levels", opt.levels, "Add dyadic levels through k, in enumeration order");

  auto* compare = app.add_subcommand("compare", "Compare two fuzzy numbers");
  compare->add_option("order", opt.selector, "Order selector")->required();
  compare->add_option("a", opt.file, "First document")->required();
  compare->add_option("b", opt.file_b, "Second document")->required();

  auto* sort = app.add_subcommand("sort", "Sort a labelled list under a total order");
  sort->add_option("order", opt.selector, "Total order selector")->required();
  sort->add_option("file", opt.file, "List document")->required();

  auto* properties = app.add_subcommand("properties", "Run the admissibility property suite");
  properties->add_option("order", opt.selector, "Total order selector")->required();
  properties->add_option("--n", opt.n, "Triples / pairs / probes per property");
  properties->add_option("--seed", opt.seed, "Corpus seed");
  properties->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  properties->add_option("--max-knots", opt.max_knots, "Segments per envelope side in the corpus")
      ->check(CLI::Range(1, 23));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*validate) return runner.validate();
    if (*cut) return runner.cut();
    if (*table) return runner.table();
    if (*compare) return runner.compare();
    if (*sort) return runner.sort();
    if (*properties) return runner.properties();
  } catch (const DocumentError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << " at character " << e.position() << "\n";
    return kUsage;
  } catch (const InvalidFuzzyNumber& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fzo::cli
