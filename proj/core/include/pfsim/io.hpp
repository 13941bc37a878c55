#pragma once

#include <string>
#include <vector>

#include "pfsim/experiment.hpp"

namespace pfsim {

// Event CSV: a comment line carrying the provenance needed to re-derive the
// summary, a header, then one row per particle. Values are printed with 17
// significant digits so a round trip reproduces doubles exactly.
//
//   # pfsim config_digest=<16 hex> seed=<u64> n_particles=<i64>
//   particle_id,slit_index,y_eps_m,theta_rad,y_det_m,x_det_m
std::string events_to_csv(const std::vector<DetectionEvent>& events,
                          const std::string& config_digest,
                          std::uint64_t seed, std::int64_t n_particles);

struct ParsedEvents {
  std::vector<DetectionEvent> events;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::int64_t n_particles = 0;
};

// Throws ConfigError on malformed input (message carries the line number).
ParsedEvents events_from_csv(const std::string& csv_text);

// Deterministic JSON rendering of a run summary.
std::string summary_to_json(const RunSummary& summary);

// Self-contained SVG panels. All three are deterministic functions of their
// inputs; the impact panel's vertical jitter is drawn from a dedicated
// substream of the run seed (display only, the transverse coordinate is
// physically fixed).
std::string render_histogram_svg(const ScreenHistogram& histogram);
std::string render_density_svg(const AngularDensityModel& model, int points);
std::string render_impacts_svg(const std::vector<DetectionEvent>& events,
                               std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pfsim
