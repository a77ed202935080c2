#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyorder/fuzzy_number.hpp"
#include "fuzzyorder/membership_spec.hpp"

namespace fzo {

/// Malformed document. `where()` is a JSON pointer (or a byte offset for
/// syntax errors) locating the problem.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Reads one of the fuzzy-number document shapes:
///
///   {"lstar": {"knots": [...], "segments": [[u, v], ...]}, "rstar": {...}}
///   {"triangular": [a, b, c]}   {"trapezoid": [a, b, c, d]}   {"interval": [a, b]}
///   {"membership": {"kernel": [a, b], "left": [[x0, x1, y0, y1], ...],
///                   "right": [...], "height": h}}
///
/// Numbers are exact-rational strings ("p/q" or decimals); JSON integers are
/// also accepted. Envelope documents are returned as-is, unvalidated; the
/// constructor shorthands throw InvalidFuzzyNumber when they are invalid.
Envelope parse_envelope(const nlohmann::json& doc, const std::string& path = "");
FuzzyNumber parse_fuzzy(const nlohmann::json& doc, const std::string& path = "");
MembershipSpec parse_membership_spec(const nlohmann::json& doc, const std::string& path = "");
Scalar parse_scalar(const nlohmann::json& value, const std::string& path);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const MonotonePL& f);
nlohmann::json to_json(const FuzzyNumber& f);
nlohmann::json to_json(const Interval& i);

struct LabeledNumber {
  std::string label;
  FuzzyNumber number;
};

/// A list document: an array (or {"items": [...]}) of {"label": ..., "number": ...}.
/// Items without a label are named by their position.
std::vector<LabeledNumber> parse_list(const nlohmann::json& doc);

/// Parses a file; syntax errors become DocumentError with a byte offset.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace fzo
