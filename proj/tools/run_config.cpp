#include "run_config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gcf::cli {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

FieldKind kind_from_string(const std::string& s) {
  if (s == "constant") return FieldKind::Constant;
  if (s == "trig") return FieldKind::Trig;
  if (s == "exp") return FieldKind::Exp;
  throw std::invalid_argument("kind must be one of constant|trig|exp, got '" + s + "'");
}

MagneticProfile RunConfig::profile() const {
  return MagneticProfile::make(kind, b_modulus, theta, kind == FieldKind::Constant ? 0.0 : mu);
}

void RunConfig::validate() const {
  if (!(b_modulus > 0.0)) throw std::invalid_argument("B_modulus must be positive");
  if (!(theta > -kPi && theta <= kPi)) {
    throw std::invalid_argument("theta must lie in (-pi, pi]");
  }
  if (kind != FieldKind::Constant && !(mu > 0.0)) {
    throw std::invalid_argument("mu must be positive");
  }
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (k_range && k_range->steps < 2) {
    throw std::invalid_argument("k range requires steps >= 2");
  }
  if (k_range && !(k_range->stop > k_range->start)) {
    throw std::invalid_argument("k range requires stop > start");
  }
  if (output.format != "csv" && output.format != "json") {
    throw std::invalid_argument("output format must be csv or json");
  }
  if (grid.n_points && *grid.n_points < 3) {
    throw std::invalid_argument("grid n_points must be at least 3");
  }
  if (grid.x_min && grid.x_max && !(*grid.x_max > *grid.x_min)) {
    throw std::invalid_argument("grid requires x_max > x_min");
  }
  profile();  // runs the profile invariants as well
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig cfg;
  if (j.contains("kind")) cfg.kind = kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("B_modulus")) cfg.b_modulus = j.at("B_modulus").get<double>();
  if (j.contains("theta")) cfg.theta = j.at("theta").get<double>();
  if (j.contains("mu")) cfg.mu = j.at("mu").get<double>();
  if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
  if (j.contains("k")) {
    const auto& jk = j.at("k");
    if (jk.is_number()) {
      cfg.k = jk.get<double>();
    } else {
      KRange r;
      r.start = jk.at("start").get<double>();
      r.stop = jk.at("stop").get<double>();
      r.steps = jk.at("steps").get<int>();
      cfg.k_range = r;
    }
  }
  if (j.contains("grid")) {
    const auto& jg = j.at("grid");
    if (jg.contains("n_points")) cfg.grid.n_points = jg.at("n_points").get<int>();
    if (jg.contains("x_min")) cfg.grid.x_min = jg.at("x_min").get<double>();
    if (jg.contains("x_max")) cfg.grid.x_max = jg.at("x_max").get<double>();
  }
  if (j.contains("output")) {
    const auto& jo = j.at("output");
    if (jo.contains("format")) cfg.output.format = jo.at("format").get<std::string>();
    if (jo.contains("path")) cfg.output.path = jo.at("path").get<std::string>();
  }
  return cfg;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["B_modulus"] = b_modulus;
  j["theta"] = theta;
  j["mu"] = mu;
  if (k) {
    j["k"] = *k;
  } else if (k_range) {
    j["k"] = {{"start", k_range->start}, {"stop", k_range->stop}, {"steps", k_range->steps}};
  }
  j["n_max"] = n_max;
  nlohmann::json jg = nlohmann::json::object();
  if (grid.n_points) jg["n_points"] = *grid.n_points;
  if (grid.x_min) jg["x_min"] = *grid.x_min;
  if (grid.x_max) jg["x_max"] = *grid.x_max;
  j["grid"] = jg;
  j["output"] = {{"format", output.format}, {"path", output.path}};
  return j;
}

void apply_preset(RunConfig& cfg, const std::string& name) {
  if (name == "fig3") {
    cfg.kind = FieldKind::Constant;
    cfg.b_modulus = 0.5;  // omega = 1
    cfg.theta = kPi / 10.0;
    cfg.k = 1.0;
    cfg.n_max = 3;
  } else if (name == "fig6") {
    cfg.kind = FieldKind::Trig;
    cfg.b_modulus = 4.0;
    cfg.theta = kPi / 10.0;
    cfg.mu = 1.0;
    cfg.k = -2.0;
    cfg.n_max = 3;
  } else if (name == "fig9") {
    cfg.kind = FieldKind::Exp;
    cfg.b_modulus = 1.0;
    cfg.theta = kPi / 10.0;
    cfg.mu = 1.0;
    cfg.k = 6.0;
    cfg.n_max = 3;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "' (expected fig3|fig6|fig9)");
  }
}

}  // namespace gcf::cli
