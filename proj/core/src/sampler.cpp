#include "pfsim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pfsim {

CdfTable build_cdf(const AngularDensityModel& model, int resolution) {
  if (resolution < kMinCdfResolution) {
    throw std::invalid_argument("build_cdf: resolution must be >= 1024");
  }
  CdfTable table;
  table.thetas.resize(resolution);
  table.cdf.resize(resolution);
  const double theta_max = model.theta_max();
  const double h = 2.0 * theta_max / (resolution - 1);
  std::vector<double> density(resolution);
  for (int i = 0; i < resolution; ++i) {
    table.thetas[i] = -theta_max + h * i;
    density[i] = model.density(table.thetas[i]);
  }
  table.thetas.back() = theta_max;  // guard against accumulation drift
  table.cdf[0] = 0.0;
  for (int i = 1; i < resolution; ++i) {
    table.cdf[i] = table.cdf[i - 1] + 0.5 * (density[i - 1] + density[i]) * h;
  }
  const double total = table.cdf.back();
  if (!(total > 0.0)) {
    throw std::invalid_argument("build_cdf: density integrates to zero");
  }
  for (int i = 1; i < resolution; ++i) {
    table.cdf[i] /= total;
  }
  table.cdf.back() = 1.0;
  return table;
}

double sample_theta(const CdfTable& table, RngStream& rng) {
  const double u = rng.next_double();
  const auto it = std::upper_bound(table.cdf.begin(), table.cdf.end(), u);
  const auto hi = static_cast<std::size_t>(
      std::min<std::ptrdiff_t>(it - table.cdf.begin(),
                               static_cast<std::ptrdiff_t>(table.cdf.size()) - 1));
  const std::size_t lo = hi - 1;
  const double span = table.cdf[hi] - table.cdf[lo];
  const double frac = span > 0.0 ? (u - table.cdf[lo]) / span : 0.0;
  return table.thetas[lo] + frac * (table.thetas[hi] - table.thetas[lo]);
}

double sample_rejection(const AngularDensityModel& model, RngStream& rng) {
  // The shape's global maximum sits at theta = 0.
  const double envelope = model.density(0.0);
  const double theta_max = model.theta_max();
  for (;;) {
    const double theta = -theta_max + 2.0 * theta_max * rng.next_double();
    if (rng.next_double() * envelope <= model.density(theta)) {
      return theta;
    }
  }
}

Launch sample_launch(const SlitGeometry& geometry, RngStream& rng) {
  const int slit = (rng.next_u64() & 1ull) ? 2 : 1;
  const double center = (slit == 1) ? geometry.y1 : geometry.y2;
  const double y_eps =
      center - 0.5 * geometry.width + geometry.width * rng.next_double();
  return {slit, y_eps};
}

}  // namespace pfsim
