#pragma once

#include "pfsim/beam.hpp"

namespace pfsim {

struct FieldParams {
  double c_f = 0.0;      // post-slit field amplitude c_F, m
  double epsilon = 1e-9;  // post-slit reference time, s

  // Amplitude small enough that the self-consistent and the fixed-momentum
  // densities agree to well below 1e-5 for the bundled experiments.
  static double default_c_f(double lambda0) { return 1e-5 * lambda0; }

  void validate() const;
};

enum class DensityMode { kApproximate, kExact };

// Single-slit envelope parameter alpha = a p_y / (4 hbar). The model's phase
// convention carries p/(2 hbar), not p/hbar; its scattering angle is twice
// the conventional one. Do not "fix" the factors.
double alpha_param(double p_py, const SlitGeometry& geometry);

// Two-slit phase phi = d p_y / (2 hbar).
double phi_param(double p_py, const SlitGeometry& geometry);

// (sin a / a)^2 with the removable singularity patched by series for
// |a| < 1e-4.
double sinc_sq(double alpha);

// Normalized angular probability density of the scattering angle,
// N^2 sinc^2(alpha) cos^2(phi/2) over [-theta_max, theta_max].
//
// approximate mode: the particle momentum is pinned at h/lambda0 (valid when
// the field carries little energy). exact mode: the particle momentum at
// each angle is the fixed point of the momentum/field closure.
//
// Normalization is computed once at construction; instances are immutable
// and safe to share across threads.
class AngularDensityModel {
 public:
  AngularDensityModel(const BeamSpec& beam, const SlitGeometry& geometry,
                      const FieldParams& field, double theta_max,
                      DensityMode mode);

  // Probability density, 1/rad. |theta| <= theta_max expected.
  double density(double theta) const;

  // Probability field |chi(theta)|^2 = 4 c_F^2 sinc^2(alpha) cos^2(phi/2),
  // m^2.
  double chi_sq_field(double theta) const;

  struct FixedPoint {
    double p_particle;  // kg m/s
    int iterations;
  };

  // Self-consistent particle momentum at theta. In approximate mode this is
  // h/lambda0 with zero iterations.
  FixedPoint particle_momentum(double theta) const;

  double norm() const { return norm_; }  // N^2, 1/rad
  double theta_max() const { return theta_max_; }
  DensityMode mode() const { return mode_; }
  const BeamSpec& beam() const { return beam_; }
  const SlitGeometry& geometry() const { return geometry_; }
  const FieldParams& field() const { return field_; }

  // Unnormalized shape sinc^2(alpha) cos^2(phi/2) at the mode's momentum.
  double shape(double theta) const;

 private:
  BeamSpec beam_;
  SlitGeometry geometry_;
  FieldParams field_;
  double theta_max_;
  DensityMode mode_;
  double norm_ = 0.0;
};

enum class EnergyRegime {
  kFieldMaximal,   // sin(theta) = 0: field energy maximal, p_y = 0
  kFieldZero,      // |chi|^2 = 0: field energy zero, particle momentum maximal
  kIntermediate,
};

struct FieldEnergy {
  double value;  // J
  EnergyRegime regime;
};

// Kinetic energy of the post-slit field,
// K_F = p_P^4 c_F^2 sinc^2(alpha) cos^2(phi/2) / (2 m hbar^2),
// with a classification of which regime the angle falls in.
FieldEnergy field_kinetic_energy(double theta,
                                 const AngularDensityModel& model);

}  // namespace pfsim
