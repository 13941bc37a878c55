#pragma once

#include <complex>

#include "pfsim/beam.hpp"
#include "pfsim/density.hpp"

namespace pfsim {

// Free-particle kernel sqrt(m / (i hbar (t - eps)))
//   * exp(i m (y - y_eps)^2 / (2 hbar (t - eps))).
// Its full-line integral has modulus sqrt(2 pi); as t -> eps it concentrates
// at y = y_eps up to that constant. Throws std::domain_error for t <= eps.
std::complex<double> propagator_ky(double y, double t, double y_eps,
                                   const FieldParams& field, double mass);

// Closed-form post-slit wavefunction along y (constant prefactor dropped):
// (sin a / a) exp(i p_y y / 2 hbar) / sqrt(t - eps)
//   * sum_i exp(-i p_y y_i / 2 hbar).
std::complex<double> psi_y_closed(double y, double t, double p_py,
                                  const SlitGeometry& geometry,
                                  const FieldParams& field);

// Same wavefunction by direct quadrature of the two slit windows, weighted
// 1/sqrt(2a); the oracle for psi_y_closed (equal up to one global constant).
std::complex<double> psi_y_quadrature(double y, double t, double p_py,
                                      const SlitGeometry& geometry,
                                      const FieldParams& field, double mass);

// Transverse field cexp(i p (x - x0) / 2 hbar); unimodular phase, so
// |chi_x|^2 = c^2 everywhere. chi_z has the same form.
std::complex<double> chi_x(double x, double p_px, double x0, double c_fx);

// Field along y (time-independent):
// c (sin a / a) exp(i p_y y / 2 hbar) sum_i exp(-i p_y y_i / 2 hbar).
// The product chi_x chi_y chi_z has squared modulus
// 4 (c_fx c_fy c_fz)^2 sinc^2(alpha) cos^2(phi/2).
std::complex<double> chi_y(double y, double p_py,
                           const SlitGeometry& geometry, double c_fy);

}  // namespace pfsim
