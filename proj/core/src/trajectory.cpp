#include "pfsim/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace pfsim {

DetectionEvent propagate(std::int64_t particle_id, int slit_index,
                         double y_eps, double theta,
                         const SlitGeometry& geometry, const BeamSpec& beam,
                         PropagationMode mode) {
  if (!(std::abs(theta) < std::numbers::pi / 2.0)) {
    throw std::domain_error("propagate: requires |theta| < pi/2");
  }
  const double l = geometry.screen_distance;
  DetectionEvent ev;
  ev.particle_id = particle_id;
  ev.slit_index = slit_index;
  ev.y_eps = y_eps;
  ev.theta = theta;
  if (mode == PropagationMode::kPaper) {
    ev.flight_scale = l;
    ev.y_det = beam.a0 * l * std::sin(theta) + y_eps;
    ev.x_det = geometry.x0 + beam.a0 * l * std::cos(theta);
  } else {
    const double c = std::cos(theta);
    if (!(c > 0.0)) {
      throw std::domain_error("propagate: no screen crossing for cos(theta) <= 0");
    }
    ev.flight_scale = l / (beam.a0 * c);
    ev.y_det = y_eps + l * std::tan(theta);
    ev.x_det = geometry.x0 + l;
  }
  return ev;
}

double particle_trajectory_y(double t, double y_eps, double p_py, double mass,
                             double epsilon) {
  if (t < epsilon) {
    throw std::domain_error("particle_trajectory_y: requires t >= epsilon");
  }
  return y_eps + (t - epsilon) * p_py / mass;
}

double particle_trajectory_x(double t, double x_eps, double p_px, double mass,
                             double epsilon) {
  if (t < epsilon) {
    throw std::domain_error("particle_trajectory_x: requires t >= epsilon");
  }
  return x_eps + (t - epsilon) * p_px / mass;
}

}  // namespace pfsim
