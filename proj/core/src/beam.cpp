#include "pfsim/beam.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pfsim {

double a0_from_field_amplitude(double lambda0, double a_p) {
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("a0_from_field_amplitude: lambda0 must be > 0");
  }
  if (a_p < 0.0) {
    throw std::invalid_argument("a0_from_field_amplitude: a_p must be >= 0");
  }
  // Isotropic closure with one shared sign across the three components:
  // the squared component sum is 3 p_P^2, and the scale factor solves
  //   a0^2 = 1 / (1 - a_p^2 p_P^2 / hbar^2),  p_P = p0 / a0,
  // whose closed form is a0^2 = 1 + (a_p p0 / hbar)^2.
  const double x = a_p * (kPlanck / lambda0) / kHbar;
  const double a0_sq = 1.0 + x * x;
  if (!(a0_sq > 0.0) || !std::isfinite(a0_sq)) {
    throw std::invalid_argument(
        "a0_from_field_amplitude: field amplitude yields invalid beam (a0^2 = " +
        std::to_string(a0_sq) + ")");
  }
  return std::sqrt(a0_sq);
}

BeamSpec BeamSpec::from_scale_factor(double lambda0, double mass, double a0) {
  BeamSpec beam;
  beam.lambda0 = lambda0;
  beam.mass = mass;
  beam.a0 = a0;
  // Back out the plane-field amplitude consistent with a0.
  beam.a_p = (a0 > 1.0)
                 ? kHbar * std::sqrt(a0 * a0 - 1.0) / (kPlanck / lambda0)
                 : 0.0;
  beam.validate();
  return beam;
}

BeamSpec BeamSpec::from_field_amplitude(double lambda0, double mass,
                                        double a_p) {
  BeamSpec beam;
  beam.lambda0 = lambda0;
  beam.mass = mass;
  beam.a_p = a_p;
  beam.a0 = a0_from_field_amplitude(lambda0, a_p);
  beam.validate();
  return beam;
}

void BeamSpec::validate() const {
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("BeamSpec: lambda0 must be > 0");
  }
  if (!(mass > 0.0)) {
    throw std::invalid_argument("BeamSpec: mass must be > 0");
  }
  if (!(a0 >= 1.0)) {
    throw std::invalid_argument("BeamSpec: a0 must be >= 1");
  }
  if (a_p < 0.0) {
    throw std::invalid_argument("BeamSpec: a_p must be >= 0");
  }
}

SlitGeometry SlitGeometry::centered(double width, double separation,
                                    double screen_distance) {
  SlitGeometry g;
  g.width = width;
  g.separation = separation;
  g.y1 = -0.5 * separation;
  g.y2 = 0.5 * separation;
  g.x0 = 0.0;
  g.z0 = 0.0;
  g.screen_distance = screen_distance;
  g.validate();
  return g;
}

void SlitGeometry::validate() const {
  if (!(width > 0.0)) {
    throw std::invalid_argument("SlitGeometry: width must be > 0");
  }
  if (!(screen_distance > 0.0)) {
    throw std::invalid_argument("SlitGeometry: screen_distance must be > 0");
  }
  if (separation < 0.0 || std::abs(std::abs(y2 - y1) - separation) >
                              1e-12 * (std::abs(y1) + std::abs(y2) + width)) {
    throw std::invalid_argument(
        "SlitGeometry: separation must equal |y2 - y1| and be >= 0");
  }
}

SlitMoments slit_position_moments(const SlitGeometry& geometry,
                                  int slit_index) {
  if (slit_index != 1 && slit_index != 2) {
    throw std::invalid_argument("slit_position_moments: slit_index must be 1 or 2");
  }
  const double center = (slit_index == 1) ? geometry.y1 : geometry.y2;
  return {center, geometry.width * geometry.width / 12.0};
}

WidthCheck validate_slit_width(const BeamSpec& beam,
                               const SlitGeometry& geometry) {
  const double bound = 3.0 / (2.0 * std::numbers::pi) * beam.lambda0;
  const double margin = geometry.width / bound;
  return {geometry.width >= bound, margin, bound};
}

std::int64_t estimate_box_quantum_number(const BeamSpec& beam,
                                         const SlitGeometry& geometry) {
  // Equates the box level n^2 h^2 / 4 a^2 with the continuous value
  // h^2 / 3 lambda0^2.
  return std::llround(2.0 * geometry.width /
                      (std::sqrt(3.0) * beam.lambda0));
}

}  // namespace pfsim
