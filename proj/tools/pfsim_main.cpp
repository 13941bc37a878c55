// pfsim: command-line front end.
//
//   pfsim simulate --config electron.json [--seed N] [--particles N]
//                  [--out-dir DIR]
//   pfsim density  --config electron.json [--points N] [--out FILE]
//   pfsim analyze  --events events.csv --config electron.json [--out FILE]
//
// Exit codes: 0 success, 2 invalid configuration or input, 3 numeric
// failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pfsim/config.hpp"
#include "pfsim/errors.hpp"
#include "pfsim/io.hpp"

namespace {

namespace fs = std::filesystem;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_simulate(const std::string& config_path,
                 std::optional<std::uint64_t> seed_override,
                 std::optional<std::int64_t> particles_override,
                 const std::string& out_dir) {
  pfsim::RunConfig config = pfsim::load_config(config_path);
  if (seed_override) config.seed = *seed_override;
  if (particles_override) config.n_particles = *particles_override;
  config.validate();

  const pfsim::RunResult result = pfsim::run(config);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  pfsim::write_file((dir / "events.csv").string(),
                    pfsim::events_to_csv(result.events,
                                         result.summary.config_digest,
                                         config.seed, config.n_particles));
  pfsim::write_file((dir / "summary.json").string(),
                    pfsim::summary_to_json(result.summary));
  pfsim::write_file((dir / "histogram.svg").string(),
                    pfsim::render_histogram_svg(result.summary.histogram));
  const pfsim::AngularDensityModel model(config.beam, config.geometry,
                                         config.field, config.theta_max,
                                         config.density_mode);
  pfsim::write_file((dir / "density.svg").string(),
                    pfsim::render_density_svg(model, 2001));
  pfsim::write_file((dir / "impacts.svg").string(),
                    pfsim::render_impacts_svg(result.events, config.seed));
  std::cout << "wrote events.csv, summary.json and 3 SVG panels to "
            << out_dir << "\n";
  return 0;
}

int cmd_density(const std::string& config_path, int points,
                const std::string& out_path) {
  const pfsim::RunConfig config = pfsim::load_config(config_path);
  if (points < 2) {
    throw pfsim::ConfigError("density: --points must be >= 2");
  }
  const pfsim::AngularDensityModel model(config.beam, config.geometry,
                                         config.field, config.theta_max,
                                         config.density_mode);
  std::ostringstream out;
  out << "theta_rad,density_per_rad\n";
  for (int i = 0; i < points; ++i) {
    const double theta =
        -config.theta_max + 2.0 * config.theta_max * i / (points - 1);
    out << g17(theta) << ',' << g17(model.density(theta)) << "\n";
  }
  pfsim::write_file(out_path, out.str());
  std::cout << "wrote " << points << " density samples to " << out_path
            << "\n";
  return 0;
}

int cmd_analyze(const std::string& events_path, const std::string& config_path,
                const std::string& out_path) {
  pfsim::RunConfig config = pfsim::load_config(config_path);
  const pfsim::ParsedEvents parsed =
      pfsim::events_from_csv(pfsim::read_file(events_path));
  // The CSV provenance pins the effective seed and particle count used at
  // simulation time; the digest must then agree with this config.
  config.seed = parsed.seed;
  config.n_particles = parsed.n_particles;
  config.validate();
  if (pfsim::config_digest_hex(config) != parsed.config_digest) {
    throw pfsim::ConfigError(
        "analyze: config digest mismatch (events were simulated with a "
        "different configuration)");
  }
  const pfsim::RunSummary summary = pfsim::summarize(config, parsed.events);
  pfsim::write_file(out_path, pfsim::summary_to_json(summary));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"particle-field double-slit simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string out_path;
  std::string events_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::int64_t> particles_override;
  int points = 2001;

  auto* simulate = app.add_subcommand("simulate", "run and write artifacts");
  simulate->add_option("--config", config_path, "config JSON path")
      ->required();
  simulate->add_option("--seed", seed_override, "override the config seed");
  simulate->add_option("--particles", particles_override,
                       "override the particle count");
  simulate->add_option("--out-dir", out_dir, "output directory");

  auto* density = app.add_subcommand("density", "tabulate the angular density");
  density->add_option("--config", config_path, "config JSON path")->required();
  density->add_option("--points", points, "grid points");
  density->add_option("--out", out_path, "output CSV path");

  auto* analyze = app.add_subcommand("analyze", "recompute a run summary");
  analyze->add_option("--events", events_path, "events CSV path")->required();
  analyze->add_option("--config", config_path, "config JSON path")->required();
  analyze->add_option("--out", out_path, "output JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) {
      return cmd_simulate(config_path, seed_override, particles_override,
                          out_dir);
    }
    if (density->parsed()) {
      return cmd_density(config_path, points,
                         out_path.empty() ? "density.csv" : out_path);
    }
    return cmd_analyze(events_path, config_path,
                       out_path.empty() ? "summary.json" : out_path);
  } catch (const pfsim::ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what()
              << " (last iterates " << e.last_iterate << ", "
              << e.previous_iterate << ")\n";
    return 3;
  } catch (const pfsim::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
}
