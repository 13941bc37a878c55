#include "pfsim/density.hpp"

#include <cmath>
#include <stdexcept>

#include "pfsim/errors.hpp"
#include "pfsim/momentum.hpp"
#include "pfsim/quadrature.hpp"

namespace pfsim {

void FieldParams::validate() const {
  if (c_f < 0.0) {
    throw std::invalid_argument("FieldParams: c_f must be >= 0");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("FieldParams: epsilon must be > 0");
  }
}

double alpha_param(double p_py, const SlitGeometry& geometry) {
  return geometry.width * p_py / (4.0 * kHbar);
}

double phi_param(double p_py, const SlitGeometry& geometry) {
  return geometry.separation * p_py / (2.0 * kHbar);
}

double sinc_sq(double alpha) {
  if (std::abs(alpha) < 1e-4) {
    const double a2 = alpha * alpha;
    const double s = 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
    return s * s;
  }
  const double s = std::sin(alpha) / alpha;
  return s * s;
}

namespace {

// sinc^2(alpha) cos^2(phi/2) at a given particle momentum.
double shape_at_momentum(double theta, double p_particle,
                         const SlitGeometry& geometry) {
  const double p_py = p_particle * std::sin(theta);
  const double c = std::cos(0.5 * phi_param(p_py, geometry));
  return sinc_sq(alpha_param(p_py, geometry)) * c * c;
}

constexpr int kFixedPointMaxIterations = 100;
constexpr double kFixedPointRelTol = 1e-12;

}  // namespace

AngularDensityModel::AngularDensityModel(const BeamSpec& beam,
                                         const SlitGeometry& geometry,
                                         const FieldParams& field,
                                         double theta_max, DensityMode mode)
    : beam_(beam),
      geometry_(geometry),
      field_(field),
      theta_max_(theta_max),
      mode_(mode) {
  beam_.validate();
  geometry_.validate();
  field_.validate();
  if (!(theta_max > 0.0) || theta_max > std::numbers::pi / 2.0) {
    throw std::invalid_argument(
        "AngularDensityModel: theta_max must lie in (0, pi/2]");
  }
  // Composite Simpson at 2^15 intervals, checked against 2^16. The shape is
  // smooth with fringe period 2 lambda0 / separation in sin(theta), and the
  // node count keeps dozens of points per oscillation for the bundled
  // configurations.
  const auto g = [this](double th) { return shape(th); };
  const double coarse = composite_simpson(g, -theta_max_, theta_max_, 1 << 15);
  const double fine = composite_simpson(g, -theta_max_, theta_max_, 1 << 16);
  if (!(fine > 0.0) ||
      std::abs(fine - coarse) > 1e-10 * std::abs(fine)) {
    throw ConvergenceError(
        "AngularDensityModel: normalization quadrature did not settle",
        fine, coarse, 0);
  }
  norm_ = 1.0 / fine;
}

AngularDensityModel::FixedPoint AngularDensityModel::particle_momentum(
    double theta) const {
  const double p0 = beam_.p0();
  if (mode_ == DensityMode::kApproximate || field_.c_f == 0.0) {
    return {p0, 0};
  }
  const double c4 = 4.0 * field_.c_f * field_.c_f;
  double p = p0;
  for (int it = 1; it <= kFixedPointMaxIterations; ++it) {
    const double chi_sq = c4 * shape_at_momentum(theta, p, geometry_);
    const double next = solve_particle_momentum(beam_, chi_sq);
    const double prev = p;
    p = next;
    if (std::abs(next - prev) <= kFixedPointRelTol * std::abs(next)) {
      return {p, it};
    }
  }
  throw ConvergenceError(
      "fixed-point particle momentum did not converge", p,
      solve_particle_momentum(
          beam_, c4 * shape_at_momentum(theta, p, geometry_)),
      kFixedPointMaxIterations);
}

double AngularDensityModel::shape(double theta) const {
  return shape_at_momentum(theta, particle_momentum(theta).p_particle,
                           geometry_);
}

double AngularDensityModel::chi_sq_field(double theta) const {
  return 4.0 * field_.c_f * field_.c_f * shape(theta);
}

double AngularDensityModel::density(double theta) const {
  return norm_ * shape(theta);
}

FieldEnergy field_kinetic_energy(double theta,
                                 const AngularDensityModel& model) {
  const double p = model.particle_momentum(theta).p_particle;
  const double shape = model.shape(theta);
  const double c_f = model.field().c_f;
  const double value = p * p * p * p * c_f * c_f * shape /
                       (2.0 * model.beam().mass * kHbar * kHbar);
  EnergyRegime regime = EnergyRegime::kIntermediate;
  if (std::sin(theta) == 0.0) {
    regime = EnergyRegime::kFieldMaximal;
  } else if (shape < 1e-30) {
    // At fringe and envelope zeros the field carries nothing and the
    // particle momentum is back at h/lambda0.
    regime = EnergyRegime::kFieldZero;
  }
  return {value, regime};
}

}  // namespace pfsim
