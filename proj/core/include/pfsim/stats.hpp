#pragma once

namespace pfsim {

// Upper 0.99 quantile of chi-squared with `dof` degrees of freedom. Exact
// table for dof <= 1024 (generated offline by an independent quantile
// routine); Wilson-Hilferty beyond that. Throws std::invalid_argument for
// dof < 1.
double chi_squared_critical_99(int dof);

}  // namespace pfsim
