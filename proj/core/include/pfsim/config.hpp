#pragma once

#include <stdexcept>
#include <string>

#include "pfsim/experiment.hpp"

namespace pfsim {

// Raised for malformed or invalid configuration input; the message carries
// line context where the parser provides it.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a JSON config document. Keys:
//   lambda0_m, mass_kg, a0, c_f_m (optional), slit_width_m,
//   slit_separation_m, screen_distance_m, theta_max_rad, n_particles,
//   seed, bins, density_mode ("approximate"|"exact"),
//   propagation_mode ("paper"|"geometric")
// Unknown keys are rejected. Slits are centered about y = 0 at x0 = z0 = 0.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Fixed-order, fixed-format rendering of the effective config; the digest
// is FNV-1a 64 over these bytes.
std::string canonical_config(const RunConfig& config);
std::uint64_t config_digest(const RunConfig& config);
std::string config_digest_hex(const RunConfig& config);

}  // namespace pfsim
