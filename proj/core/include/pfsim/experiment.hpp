#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfsim/density.hpp"
#include "pfsim/sampler.hpp"
#include "pfsim/trajectory.hpp"

namespace pfsim {

struct RunConfig {
  BeamSpec beam;
  SlitGeometry geometry;
  FieldParams field;
  double theta_max = 0.0;  // angular half-range, rad
  std::int64_t n_particles = 0;
  std::uint64_t seed = 0;
  DensityMode density_mode = DensityMode::kApproximate;
  PropagationMode propagation_mode = PropagationMode::kPaper;
  int bins = 100;
  int cdf_resolution = kDefaultCdfResolution;

  void validate() const;
};

struct ScreenHistogram {
  std::vector<double> edges;          // bins+1, strictly increasing, m
  std::vector<std::int64_t> counts;   // per-bin hits
  std::vector<double> expected;       // per-bin expected counts
};

enum class Verdict { kPass, kFail, kUnavailable };

struct GofResult {
  std::optional<double> chi_square;
  int dof = 0;
  double critical = 0.0;  // 0.99 quantile for dof, when available
  Verdict verdict = Verdict::kUnavailable;
};

struct FringeMetrics {
  std::optional<double> fringe_spacing;        // m
  std::vector<double> envelope_zeros;          // screen positions, m
  std::vector<double> analytic_peaks;          // all maxima in range, m
  std::vector<double> central_peaks;           // maxima inside first envelope zeros
};

struct RunSummary {
  ScreenHistogram histogram;
  FringeMetrics fringes;
  GofResult gof;
  std::int64_t n_particles = 0;
  std::uint64_t seed = 0;
  std::string config_digest;  // 16 hex digits
};

struct RunResult {
  std::vector<DetectionEvent> events;
  RunSummary summary;
};

// Expected screen-position density: the angular density mapped through the
// propagation rule, convolved with the two-slit uniform launch mixture. The
// slit extent is not small against the fringe spacing in general, so the
// convolution is carried out exactly by quadrature rather than dropped.
class ScreenProfile {
 public:
  ScreenProfile(const AngularDensityModel& model, PropagationMode mode);

  // [lo, hi] interval that provably contains every detectable position.
  double support_min() const { return support_min_; }
  double support_max() const { return support_max_; }

  // P(y_det in [a, b]).
  double interval_probability(double a, double b) const;

  // Probability density of y_det at y, 1/m.
  double density(double y) const;

  // Screen displacement of the angle theta, relative to the launch point.
  double map_angle(double theta) const;

 private:
  // CDF of the launch-position mixture.
  double launch_cdf(double y) const;

  const AngularDensityModel& model_;
  PropagationMode mode_;
  double scale_;  // a0 L (paper) or L (geometric tan mapping)
  double support_min_;
  double support_max_;
  std::vector<double> grid_theta_;    // Simpson nodes
  std::vector<double> grid_weight_;   // Simpson weights times density
};

// Full pipeline: sample events, propagate, bin, attach expected counts,
// fringe metrics and the goodness-of-fit verdict. `workers` splits event
// generation; any worker count produces the identical result.
RunResult run(const RunConfig& config, int workers = 1);

// Analysis-only entry point: rebuilds the summary for an existing event
// list (as `run` would have produced for the same config).
RunSummary summarize(const RunConfig& config,
                     const std::vector<DetectionEvent>& events);

// Peak structure of the expected profile: maxima located by a fine scan,
// envelope zeros placed where the sinc argument hits multiples of pi.
FringeMetrics fringe_metrics(const AngularDensityModel& model,
                             const ScreenProfile& profile);

// Pearson chi-square of counts against expected, pooling adjacent bins to
// expected >= 5. Verdict at significance 0.01. Unavailable for fewer than
// 30 events or fewer than 2 pooled bins.
GofResult goodness_of_fit(const ScreenHistogram& histogram);

}  // namespace pfsim
