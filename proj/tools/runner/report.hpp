#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace cglab::runner {

// Raised when an output file cannot be written (exit code 2).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);
std::string format_bool(bool v);

struct RowError {
  std::string row;
  std::string message;
};

// One CSV artifact. Cells are preformatted strings so that the CSV and the
// JSON mirror carry the same bytes.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Wall time per row; only ever written to the metadata sidecar.
  std::vector<double> row_ms;
  std::vector<RowError> errors;

  void add_row(std::vector<std::string> cells, double ms = 0.0);
};

struct WriteOptions {
  std::filesystem::path dir;
  bool json = false;
};

// Writes <name>.csv, optionally <name>.json, <name>.meta.json, and
// <name>.errors.csv when any row failed. Throws IoError.
void write_table(const Table& table, const WriteOptions& options, const nlohmann::json& config_echo,
                 const std::string& started_at);

std::string csv_escape(const std::string& cell);

}  // namespace cglab::runner
