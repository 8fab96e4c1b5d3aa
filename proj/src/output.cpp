#include "arcwalk/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "arcwalk/error.hpp"

namespace arcwalk {

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";  // 'n' covers nan/inf
  return s;
}

std::string emit_heatmap_csv(const Eigen::MatrixXd& matrix, std::span<const std::size_t> row_ids,
                             std::span<const std::size_t> col_ids, std::string_view corner) {
  if (row_ids.size() != static_cast<std::size_t>(matrix.rows()) ||
      col_ids.size() != static_cast<std::size_t>(matrix.cols())) {
    throw ConfigError("heatmap labels do not match the matrix shape");
  }
  std::string out(corner);
  for (std::size_t id : col_ids) out += "," + std::to_string(id);
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    out += "\n" + std::to_string(row_ids[static_cast<std::size_t>(r)]);
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) out += "," + format_number(matrix(r, c));
  }
  return out;
}

std::string emit_heatmap_csv(const Eigen::MatrixXd& matrix) {
  std::vector<std::size_t> rows(static_cast<std::size_t>(matrix.rows()));
  std::vector<std::size_t> cols(static_cast<std::size_t>(matrix.cols()));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i + 1;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i + 1;
  return emit_heatmap_csv(matrix, rows, cols);
}

Json number_array(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(round_significant(v));
  return arr;
}

Json matrix_json(const Eigen::MatrixXd& matrix) {
  Json rows = Json::array();
  Json cols = Json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) rows.push_back(r + 1);
  for (Eigen::Index c = 0; c < matrix.cols(); ++c) cols.push_back(c + 1);
  Json values = Json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) row.push_back(round_significant(matrix(r, c)));
    values.push_back(std::move(row));
  }
  return Json{{"rows", rows}, {"columns", cols}, {"values", values}};
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out.flush()) throw DataError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DataError("cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace arcwalk
