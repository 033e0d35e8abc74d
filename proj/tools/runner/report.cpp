#include "runner/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace cglab::runner {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

void Table::add_row(std::vector<std::string> cells, double ms) {
  rows.push_back(std::move(cells));
  row_ms.push_back(ms);
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto out = open_out(path);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

void write_table(const Table& table, const WriteOptions& options, const nlohmann::json& config_echo,
                 const std::string& started_at) {
  std::error_code ec;
  std::filesystem::create_directories(options.dir, ec);
  if (ec) throw IoError("cannot create output directory " + options.dir.string());

  write_csv(options.dir / (table.name + ".csv"), table.columns, table.rows);

  const auto errors_path = options.dir / (table.name + ".errors.csv");
  if (!table.errors.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : table.errors) rows.push_back({e.row, e.message});
    write_csv(errors_path, {"row", "error"}, rows);
  } else {
    std::filesystem::remove(errors_path, ec);
  }

  if (options.json) {
    nlohmann::ordered_json doc;
    doc["table"] = table.name;
    doc["config"] = config_echo;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    auto errs = nlohmann::ordered_json::array();
    for (const auto& e : table.errors) errs.push_back({{"row", e.row}, {"error", e.message}});
    doc["errors"] = errs;
    auto out = open_out(options.dir / (table.name + ".json"));
    out << doc.dump(2) << '\n';
  }

  nlohmann::ordered_json meta;
  meta["table"] = table.name;
  meta["started_at"] = started_at;
  meta["row_count"] = table.rows.size();
  meta["row_runtime_ms"] = table.row_ms;
  meta["error_count"] = table.errors.size();
  auto out = open_out(options.dir / (table.name + ".meta.json"));
  out << meta.dump(2) << '\n';
}

}  // namespace cglab::runner
