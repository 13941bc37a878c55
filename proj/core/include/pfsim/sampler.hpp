#pragma once

#include <cstdint>
#include <vector>

#include "pfsim/density.hpp"
#include "pfsim/rng.hpp"

namespace pfsim {

// Tabulated CDF of the angular density on a uniform theta grid.
struct CdfTable {
  std::vector<double> thetas;  // sorted, covers [-theta_max, theta_max]
  std::vector<double> cdf;     // non-decreasing, cdf.front()=0, cdf.back()=1
};

inline constexpr int kMinCdfResolution = 1024;
inline constexpr int kDefaultCdfResolution = 1 << 14;

// Trapezoid-accumulated CDF on `resolution` grid points, renormalized to end
// at exactly 1. Requires resolution >= 1024.
CdfTable build_cdf(const AngularDensityModel& model, int resolution);

// Inverse-CDF draw: binary search plus linear interpolation within the cell.
double sample_theta(const CdfTable& table, RngStream& rng);

// Rejection draw with the flat envelope density(0); used as an independent
// cross-check of sample_theta in tests.
double sample_rejection(const AngularDensityModel& model, RngStream& rng);

struct Launch {
  int slit_index;  // 1 or 2
  double y_eps;    // m
};

// Slit choice is a fair coin (equal superposition weights); the in-slit
// position is uniform over the chosen window.
Launch sample_launch(const SlitGeometry& geometry, RngStream& rng);

}  // namespace pfsim
