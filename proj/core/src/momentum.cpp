#include "pfsim/momentum.hpp"

#include <cmath>
#include <stdexcept>

namespace pfsim {

double solve_particle_momentum(const BeamSpec& beam, double chi_sq) {
  if (chi_sq < 0.0) {
    throw std::domain_error("solve_particle_momentum: chi_sq must be >= 0");
  }
  const double p0 = beam.p0();
  const double x = (p0 / kHbar) * (p0 / kHbar) * chi_sq;
  double p_sq;
  if (x < 1e-8) {
    // (-1 + sqrt(1 + x)) / x cancels catastrophically for tiny x; the
    // second-order expansion is exact to ~x^3 here.
    p_sq = p0 * p0 * (1.0 - 0.25 * x + 0.125 * x * x);
  } else {
    p_sq = 2.0 * kHbar * kHbar * (std::sqrt(1.0 + x) - 1.0) / chi_sq;
  }
  return std::sqrt(p_sq);
}

double pf_total_momentum(double p_particle, double chi_sq) {
  const double correction =
      p_particle * p_particle * chi_sq / (4.0 * kHbar * kHbar);
  return p_particle * std::sqrt(1.0 + correction);
}

MomentumState momentum_components(double p_particle, double theta,
                                  double chi_sq) {
  const double scale =
      std::sqrt(1.0 + p_particle * p_particle * chi_sq / (4.0 * kHbar * kHbar));
  const double p_px = p_particle * std::cos(theta);
  const double p_py = p_particle * std::sin(theta);
  return {p_particle * scale, p_particle, p_py * scale, p_px * scale};
}

FieldVelocity field_velocity(const BeamSpec& beam,
                             const std::array<double, 3>& particle_velocity,
                             const std::array<double, 3>& wavevector) {
  double sum = 0.0;
  for (int b = 0; b < 3; ++b) {
    sum += particle_velocity[b] * wavevector[b];
  }
  const double v_f = std::abs(beam.a_p * sum);
  return {v_f, 0.5 * beam.mass * v_f * v_f};
}

}  // namespace pfsim
