#include "pfsim/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "pfsim/quadrature.hpp"

namespace pfsim {

namespace {

using cplx = std::complex<double>;

// sqrt(1/i) = exp(-i pi/4)
const cplx kInvSqrtI = std::exp(cplx(0.0, -std::numbers::pi / 4.0));

double sinc(double a) {
  if (std::abs(a) < 1e-4) {
    const double a2 = a * a;
    return 1.0 - a2 / 6.0 + a2 * a2 / 120.0;
  }
  return std::sin(a) / a;
}

}  // namespace

std::complex<double> propagator_ky(double y, double t, double y_eps,
                                   const FieldParams& field, double mass) {
  const double dt = t - field.epsilon;
  if (!(dt > 0.0)) {
    throw std::domain_error("propagator_ky: requires t > epsilon");
  }
  const double dy = y - y_eps;
  const double amplitude = std::sqrt(mass / (kHbar * dt));
  const double phase = mass * dy * dy / (2.0 * kHbar * dt);
  return amplitude * kInvSqrtI * std::exp(cplx(0.0, phase));
}

std::complex<double> psi_y_closed(double y, double t, double p_py,
                                  const SlitGeometry& geometry,
                                  const FieldParams& field) {
  const double dt = t - field.epsilon;
  if (!(dt > 0.0)) {
    throw std::domain_error("psi_y_closed: requires t > epsilon");
  }
  const double alpha = geometry.width * p_py / (4.0 * kHbar);
  const double k = p_py / (2.0 * kHbar);  // the model's p/(2 hbar) convention
  const cplx slit_sum = std::exp(cplx(0.0, -k * geometry.y1)) +
                        std::exp(cplx(0.0, -k * geometry.y2));
  return sinc(alpha) * std::exp(cplx(0.0, k * y)) / std::sqrt(dt) * slit_sum;
}

std::complex<double> psi_y_quadrature(double y, double t, double p_py,
                                      const SlitGeometry& geometry,
                                      const FieldParams& field, double mass) {
  const double dt = t - field.epsilon;
  if (!(dt > 0.0)) {
    throw std::domain_error("psi_y_quadrature: requires t > epsilon");
  }
  const double k = p_py / (2.0 * kHbar);
  const cplx prefactor =
      std::sqrt(mass / (kHbar * dt)) * kInvSqrtI /
      std::sqrt(2.0 * geometry.width);
  const auto integrand = [&](double y_eps) {
    return std::exp(cplx(0.0, k * (y - y_eps)));
  };
  const double a = geometry.width;
  // Unimodular integrand, so window width sets the scale of each integral.
  const double tol = 1e-12 * a;
  cplx total = 0.0;
  for (double center : {geometry.y1, geometry.y2}) {
    total += adaptive_simpson(integrand, center - 0.5 * a, center + 0.5 * a,
                              tol);
  }
  return prefactor * total;
}

std::complex<double> chi_x(double x, double p_px, double x0, double c_fx) {
  return c_fx * std::exp(cplx(0.0, p_px * (x - x0) / (2.0 * kHbar)));
}

std::complex<double> chi_y(double y, double p_py,
                           const SlitGeometry& geometry, double c_fy) {
  const double alpha = geometry.width * p_py / (4.0 * kHbar);
  const double k = p_py / (2.0 * kHbar);
  const cplx slit_sum = std::exp(cplx(0.0, -k * geometry.y1)) +
                        std::exp(cplx(0.0, -k * geometry.y2));
  return c_fy * sinc(alpha) * std::exp(cplx(0.0, k * y)) * slit_sum;
}

}  // namespace pfsim
