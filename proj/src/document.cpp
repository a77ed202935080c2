#include "fuzzyorder/document.hpp"

#include <fstream>
#include <sstream>

namespace fzo {

using nlohmann::json;

namespace {

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw DocumentError(path, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::vector<Scalar> scalar_array(const json& arr, const std::string& path, std::size_t expected = 0) {
  if (!arr.is_array()) throw DocumentError(path, "expected an array");
  if (expected != 0 && arr.size() != expected) {
    throw DocumentError(path, "expected " + std::to_string(expected) + " numbers, got " + std::to_string(arr.size()));
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_scalar(arr[i], path + "/" + std::to_string(i)));
  return out;
}

MonotonePL parse_side(const json& doc, Direction dir, const std::string& path) {
  std::vector<Scalar> knots = scalar_array(member(doc, "knots", path), path + "/knots");
  const json& segs = member(doc, "segments", path);
  if (!segs.is_array()) throw DocumentError(path + "/segments", "expected an array");
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto uv = scalar_array(segs[i], path + "/segments/" + std::to_string(i), 2);
    segments.push_back({uv[0], uv[1]});
  }
  try {
    return MonotonePL(dir, std::move(knots), std::move(segments));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, e.what());
  }
}

std::vector<LinearPiece> parse_pieces(const json& doc, const std::string& path) {
  if (!doc.is_array()) throw DocumentError(path, "expected an array of pieces");
  std::vector<LinearPiece> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto v = scalar_array(doc[i], path + "/" + std::to_string(i), 4);
    out.push_back({v[0], v[1], v[2], v[3]});
  }
  return out;
}

template <typename Make>
auto shorthand(const std::string& path, Make make) {
  try {
    return make();
  } catch (const InvalidFuzzyNumber&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, e.what());
  }
}

}  // namespace

Scalar parse_scalar(const json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return Scalar::parse(value.get<std::string>());
    } catch (const ParseError& e) {
      throw DocumentError(path, std::string(e.what()) + " at character " + std::to_string(e.position()) + " of \"" +
                                    value.get<std::string>() + "\"");
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Scalar::parse(std::to_string(value.get<std::uint64_t>()))
                                      : Scalar(static_cast<long long>(value.get<std::int64_t>()));
  }
  if (value.is_number_float()) {
    throw DocumentError(path, "floating-point literal; write numbers as exact strings such as \"1/3\" or \"0.25\"");
  }
  throw DocumentError(path, "expected a rational number");
}

MembershipSpec parse_membership_spec(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path, "expected an object");
  auto k = scalar_array(member(doc, "kernel", path), path + "/kernel", 2);
  if (k[1] < k[0]) throw DocumentError(path + "/kernel", "kernel endpoints out of order");
  MembershipSpec spec{Interval(k[0], k[1]), {}, {}, 1};
  if (doc.contains("left")) spec.left = parse_pieces(doc.at("left"), path + "/left");
  if (doc.contains("right")) spec.right = parse_pieces(doc.at("right"), path + "/right");
  if (doc.contains("height")) spec.height = parse_scalar(doc.at("height"), path + "/height");
  return spec;
}

Envelope parse_envelope(const json& doc, const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path, "expected a fuzzy-number object");
  if (doc.contains("lstar") || doc.contains("rstar")) {
    return {parse_side(member(doc, "lstar", path), Direction::increasing, path + "/lstar"),
            parse_side(member(doc, "rstar", path), Direction::decreasing, path + "/rstar")};
  }
  if (doc.contains("triangular")) {
    auto v = scalar_array(doc.at("triangular"), path + "/triangular", 3);
    return shorthand(path + "/triangular", [&] { return FuzzyNumber::triangular(v[0], v[1], v[2]).envelope(); });
  }
  if (doc.contains("trapezoid")) {
    auto v = scalar_array(doc.at("trapezoid"), path + "/trapezoid", 4);
    return shorthand(path + "/trapezoid",
                     [&] { return FuzzyNumber::trapezoid(v[0], v[1], v[2], v[3]).envelope(); });
  }
  if (doc.contains("interval")) {
    auto v = scalar_array(doc.at("interval"), path + "/interval", 2);
    return shorthand(path + "/interval",
                     [&] { return FuzzyNumber::from_interval(Interval(v[0], v[1])).envelope(); });
  }
  if (doc.contains("membership")) {
    return from_membership(parse_membership_spec(doc.at("membership"), path + "/membership")).envelope();
  }
  throw DocumentError(path, "expected one of lstar/rstar, triangular, trapezoid, interval, membership");
}

FuzzyNumber parse_fuzzy(const json& doc, const std::string& path) { return FuzzyNumber(parse_envelope(doc, path)); }

json to_json(const Scalar& s) { return s.str(); }

json to_json(const MonotonePL& f) {
  json knots = json::array();
  for (const auto& k : f.knots()) knots.push_back(k.str());
  json segs = json::array();
  for (const auto& s : f.segments()) segs.push_back(json::array({s.start.str(), s.end.str()}));
  return {{"knots", knots}, {"segments", segs}};
}

json to_json(const FuzzyNumber& f) { return {{"lstar", to_json(f.lstar())}, {"rstar", to_json(f.rstar())}}; }

json to_json(const Interval& i) { return json::array({i.lo().str(), i.hi().str()}); }

std::vector<LabeledNumber> parse_list(const json& doc) {
  const json* items = &doc;
  std::string base;
  if (doc.is_object() && doc.contains("items")) {
    items = &doc.at("items");
    base = "/items";
  }
  if (!items->is_array()) throw DocumentError(base, "expected an array of {\"label\", \"number\"} items");
  std::vector<LabeledNumber> out;
  for (std::size_t i = 0; i < items->size(); ++i) {
    const std::string path = base + "/" + std::to_string(i);
    const json& item = (*items)[i];
    std::string label = "#" + std::to_string(i);
    if (item.is_object() && item.contains("label")) {
      if (!item.at("label").is_string()) throw DocumentError(path + "/label", "label must be a string");
      label = item.at("label").get<std::string>();
    }
    out.push_back({label, parse_fuzzy(member(item, "number", path), path + "/number")});
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw DocumentError(path.string() + "@byte " + std::to_string(e.byte), e.what());
  }
}

}  // namespace fzo
