#pragma once

#include <stdexcept>
#include <string>

namespace pfsim {

// A self-consistent solve or a quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last, double previous,
                   int iterations)
      : std::runtime_error(what),
        last_iterate(last),
        previous_iterate(previous),
        iterations(iterations) {}

  double last_iterate;
  double previous_iterate;
  int iterations;
};

}  // namespace pfsim
