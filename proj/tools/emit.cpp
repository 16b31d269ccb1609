#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace gcf::cli {

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const Table& table) {
  std::string out;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, const RunConfig& cfg, const std::string& command) {
  nlohmann::json j;
  j["meta"] = cfg.to_json();
  j["meta"]["command"] = command;
  j["meta"]["artifact_version"] = "1.0.0";
  j["meta"]["columns"] = table.header;
  j["rows"] = table.rows;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Table& table, const RunConfig& cfg, const std::string& command) {
  if (table.rows.empty()) throw std::invalid_argument("nothing to emit: no rows produced");
  return cfg.output.format == "csv" ? render_csv(table) : render_json(table, cfg, command);
}

void emit(const Table& table, const RunConfig& cfg, const std::string& command) {
  std::string payload = render(table, cfg, command);
  if (cfg.output.path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.output.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path '" + cfg.output.path + "'");
  f << payload;
  if (!f.good()) throw std::runtime_error("write failed for '" + cfg.output.path + "'");
}

}  // namespace gcf::cli
