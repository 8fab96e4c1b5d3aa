#pragma once

#include <Eigen/Dense>
#include "json.hpp"
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcwalk {

using Json = nlohmann::json;

/// Rounds to 12 significant digits. Serializing the result with a shortest
/// round-trip printer yields at most 12 digits and re-parses bit-exactly.
double round_significant(double value);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_number(double value);

/// Header "<corner>,<col ids>", then one line per row: "<row id>,<values>".
std::string emit_heatmap_csv(const Eigen::MatrixXd& matrix, std::span<const std::size_t> row_ids,
                             std::span<const std::size_t> col_ids, std::string_view corner = "l");
/// Square matrix labeled 1..N on both axes.
std::string emit_heatmap_csv(const Eigen::MatrixXd& matrix);

/// Labeled matrix payload: {"rows": [...], "columns": [...], "values": [[...]]}.
Json matrix_json(const Eigen::MatrixXd& matrix);
Json number_array(std::span<const double> values);

/// Metadata plus payload; see run() for the payload shapes per command.
struct OutputDocument {
  Json metadata;
  Json payload;
  /// Set by commands whose natural CSV form is a table or heatmap.
  std::string csv;

  Json to_json() const { return Json{{"metadata", metadata}, {"payload", payload}}; }
  std::string dump_json() const { return to_json().dump(2) + "\n"; }
};

/// Writes to a temporary sibling file and renames it into place.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace arcwalk
