#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gcf/profiles.hpp"

namespace gcf::cli {

struct KRange {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
};

struct GridOverride {
  std::optional<int> n_points;
  std::optional<double> x_min;
  std::optional<double> x_max;
};

struct OutputSpec {
  std::string format = "csv";  // csv | json
  std::string path;            // empty = stdout
};

// One fully validated run description. Every subcommand reads from here;
// validation happens before any solver is touched.
struct RunConfig {
  FieldKind kind = FieldKind::Constant;
  double b_modulus = 1.0;
  double theta = 0.0;
  double mu = 1.0;
  std::optional<double> k;
  std::optional<KRange> k_range;
  int n_max = 5;
  GridOverride grid;
  OutputSpec output;
  bool holes = false;

  MagneticProfile profile() const;
  void validate() const;  // throws std::invalid_argument with the violated rule

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// named parameter sets reproducing the reference figures
//   fig3: uniform field,  |omega| = 1, theta = pi/10, k = 1
//   fig6: singular well,  |D| = 4,     theta = pi/10, k = -2, mu = 1
//   fig9: decaying field, |D| = 1,     theta = pi/10, k = 6,  mu = 1
void apply_preset(RunConfig& cfg, const std::string& name);

FieldKind kind_from_string(const std::string& s);

}  // namespace gcf::cli
