#include "pfsim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pfsim/config.hpp"
#include "pfsim/stats.hpp"

namespace pfsim {

void RunConfig::validate() const {
  beam.validate();
  geometry.validate();
  field.validate();
  if (n_particles < 1) {
    throw std::invalid_argument("RunConfig: n_particles must be >= 1");
  }
  if (bins < 10) {
    throw std::invalid_argument("RunConfig: bins must be >= 10");
  }
  if (!(theta_max > 0.0) || theta_max > std::numbers::pi / 2.0) {
    throw std::invalid_argument("RunConfig: theta_max must lie in (0, pi/2]");
  }
  if (propagation_mode == PropagationMode::kGeometric &&
      !(theta_max < std::numbers::pi / 2.0)) {
    throw std::invalid_argument(
        "RunConfig: geometric propagation needs theta_max < pi/2");
  }
  if (cdf_resolution < kMinCdfResolution) {
    throw std::invalid_argument("RunConfig: cdf_resolution must be >= 1024");
  }
  const WidthCheck check = validate_slit_width(beam, geometry);
  if (!check.pass) {
    throw std::invalid_argument(
        "RunConfig: slit width below the indeterminacy bound (margin " +
        std::to_string(check.margin) + ")");
  }
}

namespace {

constexpr int kProfileIntervals = 1 << 14;  // Simpson nodes for the profile
constexpr int kPeakScanCells = 4096;
constexpr double kPoolThreshold = 5.0;
constexpr std::int64_t kMinEventsForVerdict = 30;

}  // namespace

ScreenProfile::ScreenProfile(const AngularDensityModel& model,
                             PropagationMode mode)
    : model_(model), mode_(mode) {
  const auto& g = model.geometry();
  scale_ = (mode == PropagationMode::kPaper)
               ? model.beam().a0 * g.screen_distance
               : g.screen_distance;
  const double reach = map_angle(model.theta_max());
  support_min_ = -reach + g.y1 - 0.5 * g.width;
  support_max_ = reach + g.y2 + 0.5 * g.width;

  // Simpson nodes over the angular range; each weight already carries the
  // density value, so the cumulative below is a single weighted sum.
  const int n = kProfileIntervals;
  const double theta_max = model.theta_max();
  const double h = 2.0 * theta_max / n;
  grid_theta_.resize(n + 1);
  grid_weight_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double theta = -theta_max + h * i;
    double w = (i == 0 || i == n) ? 1.0 : ((i & 1) ? 4.0 : 2.0);
    grid_theta_[i] = theta;
    grid_weight_[i] = w * (h / 3.0) * model.density(theta);
  }
}

double ScreenProfile::map_angle(double theta) const {
  return (mode_ == PropagationMode::kPaper) ? scale_ * std::sin(theta)
                                            : scale_ * std::tan(theta);
}

double ScreenProfile::launch_cdf(double y) const {
  const auto& g = model_.geometry();
  const double a = g.width;
  double cdf = 0.0;
  for (double center : {g.y1, g.y2}) {
    const double t = (y - (center - 0.5 * a)) / a;
    cdf += 0.5 * std::clamp(t, 0.0, 1.0);
  }
  return cdf;
}

double ScreenProfile::interval_probability(double a, double b) const {
  double p = 0.0;
  for (std::size_t i = 0; i < grid_theta_.size(); ++i) {
    const double s = map_angle(grid_theta_[i]);
    p += grid_weight_[i] * (launch_cdf(b - s) - launch_cdf(a - s));
  }
  return p;
}

double ScreenProfile::density(double y) const {
  // Central difference of the cumulative; the step is well above the
  // quadrature grid spacing and well below any fringe width.
  const double delta = (support_max_ - support_min_) * 1e-6;
  return interval_probability(y - delta, y + delta) / (2.0 * delta);
}

FringeMetrics fringe_metrics(const AngularDensityModel& model,
                             const ScreenProfile& profile) {
  FringeMetrics metrics;
  const auto& g = model.geometry();
  const double midpoint = g.midpoint();
  const double sin_max = std::sin(model.theta_max());

  // Envelope zeros: sinc argument at k pi, i.e. sin(theta) = 2 k lambda0 / a.
  // The field vanishes there, so the momentum closure pins p at h/lambda0 and
  // the positions are mode-independent.
  const double sin_step = 2.0 * model.beam().lambda0 / g.width;
  for (int k = 1; k * sin_step <= sin_max; ++k) {
    const double offset = profile.map_angle(std::asin(k * sin_step));
    metrics.envelope_zeros.push_back(midpoint - offset);
    metrics.envelope_zeros.push_back(midpoint + offset);
  }
  std::sort(metrics.envelope_zeros.begin(), metrics.envelope_zeros.end());

  // Scan equal-width cell masses of the expected profile; a parabolic fit
  // through each local maximum refines the peak position.
  const int cells = kPeakScanCells;
  const double lo = profile.support_min();
  const double hi = profile.support_max();
  const double w = (hi - lo) / cells;
  std::vector<double> mass(cells);
  std::vector<double> cum(cells + 1);
  for (int j = 0; j <= cells; ++j) {
    cum[j] = profile.interval_probability(lo, lo + w * j);
  }
  double peak_mass = 0.0;
  for (int j = 0; j < cells; ++j) {
    mass[j] = cum[j + 1] - cum[j];
    peak_mass = std::max(peak_mass, mass[j]);
  }
  const double floor = 1e-9 * peak_mass;
  std::vector<double> peak_heights;
  for (int j = 1; j + 1 < cells; ++j) {
    if (mass[j] > floor && mass[j] > mass[j - 1] && mass[j] > mass[j + 1]) {
      const double denom = mass[j - 1] - 2.0 * mass[j] + mass[j + 1];
      double shift = 0.0;
      if (denom < 0.0) {
        shift = 0.5 * (mass[j - 1] - mass[j + 1]) / denom;
      }
      metrics.analytic_peaks.push_back(lo + w * (j + 0.5 + shift));
      peak_heights.push_back(mass[j]);
    }
  }

  // Central peaks: inside the first envelope zeros when those exist in
  // range, otherwise every detected maximum. When the slit ratio makes a
  // fringe coincide with an envelope zero, faint leak humps flank the
  // suppressed fringe; the height floor keeps them out of the spacing
  // estimate.
  double central_lo = lo;
  double central_hi = hi;
  if (!metrics.envelope_zeros.empty()) {
    const double first = profile.map_angle(std::asin(sin_step));
    central_lo = midpoint - first;
    central_hi = midpoint + first;
  }
  for (std::size_t i = 0; i < metrics.analytic_peaks.size(); ++i) {
    const double p = metrics.analytic_peaks[i];
    if (p > central_lo && p < central_hi &&
        peak_heights[i] >= 0.01 * peak_mass) {
      metrics.central_peaks.push_back(p);
    }
  }

  if (metrics.analytic_peaks.size() >= 3 && metrics.central_peaks.size() >= 2) {
    double gap_sum = 0.0;
    for (std::size_t i = 1; i < metrics.central_peaks.size(); ++i) {
      gap_sum += metrics.central_peaks[i] - metrics.central_peaks[i - 1];
    }
    metrics.fringe_spacing =
        gap_sum / static_cast<double>(metrics.central_peaks.size() - 1);
  }
  return metrics;
}

GofResult goodness_of_fit(const ScreenHistogram& histogram) {
  GofResult result;
  std::int64_t total = 0;
  for (auto c : histogram.counts) total += c;
  if (total < kMinEventsForVerdict) {
    return result;  // verdict unavailable for tiny samples
  }

  // Pool adjacent bins until each pooled bin expects at least 5 counts; a
  // short tail folds into the previous pooled bin.
  std::vector<double> pooled_expected;
  std::vector<std::int64_t> pooled_counts;
  double e_acc = 0.0;
  std::int64_t c_acc = 0;
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    e_acc += histogram.expected[i];
    c_acc += histogram.counts[i];
    if (e_acc >= kPoolThreshold) {
      pooled_expected.push_back(e_acc);
      pooled_counts.push_back(c_acc);
      e_acc = 0.0;
      c_acc = 0;
    }
  }
  if (e_acc > 0.0 || c_acc > 0) {
    if (pooled_expected.empty()) {
      return result;
    }
    pooled_expected.back() += e_acc;
    pooled_counts.back() += c_acc;
  }
  if (pooled_expected.size() < 2) {
    return result;
  }

  double chi2 = 0.0;
  for (std::size_t i = 0; i < pooled_expected.size(); ++i) {
    const double d = static_cast<double>(pooled_counts[i]) - pooled_expected[i];
    chi2 += d * d / pooled_expected[i];
  }
  result.chi_square = chi2;
  result.dof = static_cast<int>(pooled_expected.size()) - 1;
  result.critical = chi_squared_critical_99(result.dof);
  result.verdict = (chi2 < result.critical) ? Verdict::kPass : Verdict::kFail;
  return result;
}

namespace {

std::vector<DetectionEvent> generate_events(const RunConfig& config,
                                            const CdfTable& table,
                                            int workers) {
  const std::int64_t n = config.n_particles;
  std::vector<DetectionEvent> events(static_cast<std::size_t>(n));
  // One substream per particle, so the event list does not depend on how
  // the index range is split. Draw order per particle: slit, launch
  // position, angle.
  const auto fill_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      RngStream rng(config.seed, static_cast<std::uint64_t>(i));
      const Launch launch = sample_launch(config.geometry, rng);
      const double theta = sample_theta(table, rng);
      events[static_cast<std::size_t>(i)] =
          propagate(i, launch.slit_index, launch.y_eps, theta,
                    config.geometry, config.beam, config.propagation_mode);
    }
  };
  const int w = std::max(1, workers);
  if (w == 1 || n < 2 * w) {
    fill_range(0, n);
    return events;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  const std::int64_t chunk = (n + w - 1) / w;
  for (int t = 0; t < w; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fill_range, begin, end);
  }
  for (auto& th : pool) th.join();
  return events;
}

}  // namespace

RunSummary summarize(const RunConfig& config,
                     const std::vector<DetectionEvent>& events) {
  const AngularDensityModel model(config.beam, config.geometry, config.field,
                                  config.theta_max, config.density_mode);
  const ScreenProfile profile(model, config.propagation_mode);

  RunSummary summary;
  summary.n_particles = config.n_particles;
  summary.seed = config.seed;
  summary.config_digest = config_digest_hex(config);

  const int bins = config.bins;
  const double lo = profile.support_min();
  const double hi = profile.support_max();
  const double w = (hi - lo) / bins;
  summary.histogram.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int j = 0; j <= bins; ++j) {
    summary.histogram.edges[static_cast<std::size_t>(j)] = lo + w * j;
  }
  summary.histogram.edges.back() = hi;
  summary.histogram.counts.assign(static_cast<std::size_t>(bins), 0);
  for (const auto& ev : events) {
    auto j = static_cast<std::int64_t>((ev.y_det - lo) / w);
    j = std::clamp<std::int64_t>(j, 0, bins - 1);
    ++summary.histogram.counts[static_cast<std::size_t>(j)];
  }
  summary.histogram.expected.resize(static_cast<std::size_t>(bins));
  const double n = static_cast<double>(config.n_particles);
  for (int j = 0; j < bins; ++j) {
    summary.histogram.expected[static_cast<std::size_t>(j)] =
        n * profile.interval_probability(summary.histogram.edges[j],
                                         summary.histogram.edges[j + 1]);
  }

  summary.fringes = fringe_metrics(model, profile);
  summary.gof = goodness_of_fit(summary.histogram);
  return summary;
}

RunResult run(const RunConfig& config, int workers) {
  config.validate();
  const AngularDensityModel model(config.beam, config.geometry, config.field,
                                  config.theta_max, config.density_mode);
  const CdfTable table = build_cdf(model, config.cdf_resolution);
  RunResult result;
  result.events = generate_events(config, table, workers);
  result.summary = summarize(config, result.events);
  return result;
}

}  // namespace pfsim
