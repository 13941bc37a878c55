#include "pfsim/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "chi2_table_99.inc"

namespace pfsim {

double chi_squared_critical_99(int dof) {
  if (dof < 1) {
    throw std::invalid_argument("chi_squared_critical_99: dof must be >= 1");
  }
  if (dof <= detail::kChi2TableMaxDof) {
    return detail::kChi2Critical99[dof - 1];
  }
  // Wilson-Hilferty cube approximation; relative error is ~1e-6 at this
  // table's upper end and shrinks with dof.
  const double z99 = 2.3263478740408408;  // standard normal 0.99 quantile
  const double k = static_cast<double>(dof);
  const double t = 1.0 - 2.0 / (9.0 * k) + z99 * std::sqrt(2.0 / (9.0 * k));
  return k * t * t * t;
}

}  // namespace pfsim
