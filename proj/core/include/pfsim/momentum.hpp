#pragma once

#include <array>

#include "pfsim/beam.hpp"

namespace pfsim {

// Momentum bookkeeping of a particle-field system after the slits. The
// in-plane restriction (polar angle pi/2) is applied throughout, so only x
// and y components are carried.
struct MomentumState {
  double p_total;     // PF system momentum magnitude, kg m/s
  double p_particle;  // particle momentum magnitude, kg m/s
  double p_y;         // PF momentum y component, kg m/s
  double p_x;         // PF momentum x component, kg m/s
};

// Particle momentum that keeps the PF system momentum equal to h/lambda0
// for a given probability-field value |chi|^2 (in m^2; p^2 |chi|^2 / hbar^2
// is then dimensionless). Evaluated by series below x = (p0/hbar)^2 |chi|^2
// = 1e-8 to avoid cancellation in (-1 + sqrt(1 + x)).
double solve_particle_momentum(const BeamSpec& beam, double chi_sq);

// Momentum of the whole PF system: p = p_P sqrt(1 + p_P^2 |chi|^2 / 4 hbar^2).
double pf_total_momentum(double p_particle, double chi_sq);

// In-plane momentum decomposition at scattering angle theta. With the
// self-consistent particle momentum this reduces to
// p_x = (h/lambda0) cos(theta), p_y = (h/lambda0) sin(theta).
MomentumState momentum_components(double p_particle, double theta,
                                  double chi_sq);

struct FieldVelocity {
  double v_f;             // m/s
  double kinetic_energy;  // J
};

// Plane-field velocity |a_p sum_b v_b k_b| and its kinetic energy
// (1/2) m v_f^2 at the source.
FieldVelocity field_velocity(const BeamSpec& beam,
                             const std::array<double, 3>& particle_velocity,
                             const std::array<double, 3>& wavevector);

}  // namespace pfsim
