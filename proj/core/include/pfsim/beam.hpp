#pragma once

#include <cstdint>

#include "pfsim/constants.hpp"

namespace pfsim {

// Incident beam: one particle-field system per emitted particle. Before the
// slits the system carries momentum p0 = h/lambda0, of which the particle
// itself carries p0/a0; the plane field holds the rest.
struct BeamSpec {
  double lambda0 = 0.0;  // associated (de Broglie) wavelength at the source, m
  double mass = 0.0;     // particle mass, kg
  double a_p = 0.0;      // plane-field amplitude, m
  double a0 = 1.0;       // momentum scale factor, >= 1, dimensionless

  // Builds a beam from the scale factor; the consistent plane-field
  // amplitude is back-computed.
  static BeamSpec from_scale_factor(double lambda0, double mass, double a0);
  // Builds a beam from the plane-field amplitude; a0 is derived.
  static BeamSpec from_field_amplitude(double lambda0, double mass,
                                       double a_p);

  double p0() const { return kPlanck / lambda0; }
  double particle_momentum0() const { return p0() / a0; }

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct SlitGeometry {
  double width = 0.0;            // slit width a, m
  double separation = 0.0;       // center-to-center distance d, m
  double y1 = 0.0;               // midpoint of slit 1, m
  double y2 = 0.0;               // midpoint of slit 2, m
  double x0 = 0.0;               // slit-plane x coordinate, m
  double z0 = 0.0;               // slit-plane z coordinate, m
  double screen_distance = 0.0;  // slits-to-screen distance L, m

  // Slits placed symmetrically about y = 0.
  static SlitGeometry centered(double width, double separation,
                               double screen_distance);

  double midpoint() const { return 0.5 * (y1 + y2); }
  void validate() const;
};

// Scale factor reached by a plane field of amplitude a_p:
// a0 = sqrt(1 + (a_p p0 / hbar)^2). Equivalent to the self-consistent
// isotropic closure with all three momentum components carrying one sign.
double a0_from_field_amplitude(double lambda0, double a_p);

// Magnitude of one Cartesian component of the particle momentum at the
// source under isotropy: (1/sqrt3)(h/lambda0)/a0. The sign is a separate
// sampling choice.
double isotropic_component_momentum(const BeamSpec& beam);

struct SlitMoments {
  double mean;      // m
  double variance;  // m^2
};

// Mean and variance of the uniform in-slit position for slit 1 or 2.
SlitMoments slit_position_moments(const SlitGeometry& geometry,
                                  int slit_index);

struct WidthCheck {
  bool pass;
  double margin;  // width / minimum admissible width
  double bound;   // minimum admissible width, m
};

// The indeterminacy relation bounds the slit width from below by
// (3/2pi) lambda0.
WidthCheck validate_slit_width(const BeamSpec& beam,
                               const SlitGeometry& geometry);

// Energy quantum number of the slit seen as a one-dimensional box,
// n = round(2 a / (sqrt3 lambda0)). Diagnostic only.
std::int64_t estimate_box_quantum_number(const BeamSpec& beam,
                                         const SlitGeometry& geometry);

}  // namespace pfsim
