#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace gcf::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Renders the table per the output spec: CSV with the exact header line,
// 17 significant digits and LF endings, or JSON {"meta": .., "rows": ..}.
// Identical configs produce byte-identical artifacts.
std::string render(const Table& table, const RunConfig& cfg, const std::string& command);

// Writes to cfg.output.path, or stdout when the path is empty.
void emit(const Table& table, const RunConfig& cfg, const std::string& command);

}  // namespace gcf::cli
