#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "pfsim/errors.hpp"

namespace pfsim {

// Composite Simpson on a uniform grid; `intervals` must be even.
template <class F>
auto composite_simpson(F&& f, double a, double b, std::int64_t intervals)
    -> decltype(f(a)) {
  const double h = (b - a) / static_cast<double>(intervals);
  auto sum = f(a) + f(b);
  for (std::int64_t i = 1; i < intervals; ++i) {
    const double x = a + h * static_cast<double>(i);
    sum += f(x) * ((i & 1) ? 4.0 : 2.0);
  }
  return sum * (h / 3.0);
}

namespace detail {

template <class T>
double quad_norm(T v) {
  return std::abs(v);
}

template <class F, class T>
T adaptive_simpson_rec(F& f, double a, double b, T fa, T fm, T fb, T whole,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (flm * 4.0 + fa + fm) * ((m - a) / 6.0);
  const T right = (frm * 4.0 + fm + fb) * ((b - m) / 6.0);
  const T delta = left + right - whole;
  if (depth <= 0) {
    throw ConvergenceError("adaptive Simpson: max recursion depth reached",
                           quad_norm(left + right), quad_norm(whole), depth);
  }
  if (quad_norm(delta) <= 15.0 * tol) {
    return left + right + delta * (1.0 / 15.0);
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                              depth - 1);
}

}  // namespace detail

// Adaptive Simpson with an absolute tolerance. Works for real and complex
// integrands.
template <class F>
auto adaptive_simpson(F&& f, double a, double b, double abs_tol,
                      int max_depth = 48) -> decltype(f(a)) {
  using T = decltype(f(a));
  const double m = 0.5 * (a + b);
  const T fa = f(a);
  const T fm = f(m);
  const T fb = f(b);
  const T whole = (fm * 4.0 + fa + fb) * ((b - a) / 6.0);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol,
                                      max_depth);
}

}  // namespace pfsim
