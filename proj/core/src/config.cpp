#include "pfsim/config.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pfsim/io.hpp"

namespace pfsim {

namespace {

using nlohmann::json;

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

const std::set<std::string> kKnownKeys = {
    "lambda0_m",      "mass_kg",          "a0",
    "c_f_m",          "slit_width_m",     "slit_separation_m",
    "screen_distance_m", "theta_max_rad", "n_particles",
    "seed",           "bins",             "density_mode",
    "propagation_mode"};

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key)) {
    throw ConfigError("config: missing key '" + key + "'");
  }
  if (!j.at(key).is_number()) {
    throw ConfigError("config: key '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

double require_positive(const json& j, const std::string& key) {
  const double v = require_number(j, key);
  if (!(v > 0.0)) {
    throw ConfigError("config: key '" + key + "' must be > 0");
  }
  return v;
}

std::string require_string(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ConfigError("config: key '" + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: parse error at line " +
                      std::to_string(line_of_offset(json_text, e.byte)) +
                      ": " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  for (const auto& item : j.items()) {
    if (!kKnownKeys.count(item.key())) {
      throw ConfigError("config: unknown key '" + item.key() + "'");
    }
  }

  RunConfig config;
  const double lambda0 = require_positive(j, "lambda0_m");
  const double mass = require_positive(j, "mass_kg");
  const double a0 = require_number(j, "a0");
  config.beam = BeamSpec::from_scale_factor(lambda0, mass, a0);

  config.geometry = SlitGeometry::centered(
      require_positive(j, "slit_width_m"),
      require_number(j, "slit_separation_m"),
      require_positive(j, "screen_distance_m"));

  config.field.c_f = j.contains("c_f_m") ? require_positive(j, "c_f_m")
                                         : FieldParams::default_c_f(lambda0);

  config.theta_max = require_positive(j, "theta_max_rad");
  config.n_particles =
      static_cast<std::int64_t>(require_number(j, "n_particles"));
  if (!j.contains("seed") || !j.at("seed").is_number_unsigned()) {
    throw ConfigError("config: key 'seed' must be a non-negative integer");
  }
  config.seed = j.at("seed").get<std::uint64_t>();
  config.bins = static_cast<int>(require_number(j, "bins"));

  const std::string density = require_string(j, "density_mode");
  if (density == "approximate") {
    config.density_mode = DensityMode::kApproximate;
  } else if (density == "exact") {
    config.density_mode = DensityMode::kExact;
  } else {
    throw ConfigError("config: density_mode must be 'approximate' or 'exact'");
  }

  const std::string propagation = require_string(j, "propagation_mode");
  if (propagation == "paper") {
    config.propagation_mode = PropagationMode::kPaper;
  } else if (propagation == "geometric") {
    config.propagation_mode = PropagationMode::kGeometric;
  } else {
    throw ConfigError(
        "config: propagation_mode must be 'paper' or 'geometric'");
  }

  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  return parse_config(read_file(path));
}

std::string canonical_config(const RunConfig& config) {
  std::ostringstream out;
  out << "lambda0_m=" << format_g17(config.beam.lambda0)
      << ";mass_kg=" << format_g17(config.beam.mass)
      << ";a0=" << format_g17(config.beam.a0)
      << ";c_f_m=" << format_g17(config.field.c_f)
      << ";slit_width_m=" << format_g17(config.geometry.width)
      << ";slit_separation_m=" << format_g17(config.geometry.separation)
      << ";screen_distance_m=" << format_g17(config.geometry.screen_distance)
      << ";theta_max_rad=" << format_g17(config.theta_max)
      << ";n_particles=" << config.n_particles << ";seed=" << config.seed
      << ";bins=" << config.bins << ";density_mode="
      << (config.density_mode == DensityMode::kExact ? "exact" : "approximate")
      << ";propagation_mode="
      << (config.propagation_mode == PropagationMode::kGeometric ? "geometric"
                                                                 : "paper")
      << ";";
  return out.str();
}

std::uint64_t config_digest(const RunConfig& config) {
  // FNV-1a 64 over the canonical rendering.
  const std::string canon = canonical_config(config);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string config_digest_hex(const RunConfig& config) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, config_digest(config));
  return buf;
}

}  // namespace pfsim
