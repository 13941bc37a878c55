#pragma once

#include <numbers>

namespace pfsim {

// 2019 SI exact value.
inline constexpr double kPlanck = 6.62607015e-34;  // J s
inline constexpr double kHbar = kPlanck / (2.0 * std::numbers::pi);  // J s

}  // namespace pfsim
