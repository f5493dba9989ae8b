#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mcp1d/density.hpp"
#include "mcp1d/geometry.hpp"
#include "mcp1d/needles.hpp"

namespace mcp1d {

using json = nlohmann::ordered_json;

// Shortest decimal form that round-trips a double (17 significant digits).
[[nodiscard]] std::string format_double(double v);

// Minimal CSV assembly: header once, then rows; LF line endings.
class CsvWriter {
 public:
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);
  [[nodiscard]] const std::string& str() const { return out_; }

 private:
  std::string out_;
};

[[nodiscard]] json to_json(const IntervalSet& E);
[[nodiscard]] IntervalSet interval_set_from_json(const json& j);

[[nodiscard]] json to_json(const McpViolation& v);
[[nodiscard]] json to_json(const McpReport& r);

[[nodiscard]] json to_json(const NeedleDecomposition& dec);
[[nodiscard]] NeedleDecomposition decomposition_from_json(const json& j);

[[nodiscard]] json to_json(const LocalizedReport& r);
[[nodiscard]] json to_json(const TheoremReport& r);

void write_text_file(const std::string& path, const std::string& content);
[[nodiscard]] std::string read_text_file(const std::string& path);

}  // namespace mcp1d
