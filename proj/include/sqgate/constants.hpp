#ifndef SQGATE_CONSTANTS_HPP
#define SQGATE_CONSTANTS_HPP

#include <numbers>

namespace sqgate {

// Single source of truth for physical constants (SI).
inline constexpr double kHbar = 1.054571817e-34;  // J s
inline constexpr double kPhi0 = 2.067833848e-15;  // Wb, h/2e
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace sqgate

#endif
