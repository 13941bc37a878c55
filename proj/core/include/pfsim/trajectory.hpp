#pragma once

#include <cstdint>

#include "pfsim/beam.hpp"

namespace pfsim {

// How a sampled event is carried to the screen.
//
// kPaper uses the detection rule y_det = a0 L sin(theta) + y_eps, which
// identifies the free-flight scale v (T - eps) with L. kGeometric instead
// picks the flight time so the x coordinate crosses the screen plane
// x0 + L, giving y_det = y_eps + L tan(theta), and exists to quantify the
// kPaper approximation.
enum class PropagationMode { kPaper, kGeometric };

struct DetectionEvent {
  std::int64_t particle_id;
  int slit_index;       // 1 or 2
  double y_eps;         // launch position inside the slit, m
  double theta;         // scattering angle, rad
  double y_det;         // detected screen y, m
  double x_det;         // detected screen x, m
  double flight_scale;  // the value used for v (T - eps), m
};

// Maps (slit, launch position, angle) to a screen detection. Requires
// |theta| < pi/2; geometric mode additionally throws std::domain_error when
// cos(theta) <= 0 (no screen crossing).
DetectionEvent propagate(std::int64_t particle_id, int slit_index,
                         double y_eps, double theta,
                         const SlitGeometry& geometry, const BeamSpec& beam,
                         PropagationMode mode);

// Free post-slit motion along y: y(t) = y_eps + (t - eps) p_y / m.
// Throws std::domain_error for t < eps.
double particle_trajectory_y(double t, double y_eps, double p_py, double mass,
                             double epsilon);

// Same along x: x(t) = x_eps + (t - eps) p_x / m.
double particle_trajectory_x(double t, double x_eps, double p_px, double mass,
                             double epsilon);

}  // namespace pfsim
