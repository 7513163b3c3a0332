#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace phasekick {

using cplx = std::complex<double>;

// Default tolerance for amplitude-level comparisons; closed-form algebraic
// identities are held to the tighter bound.
inline constexpr double kAmplitudeTol = 1e-10;
inline constexpr double kClosedFormTol = 1e-12;

inline constexpr bool is_power_of_two(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

/// omega_M^e = exp(2*pi*i*e/M). The exponent is reduced mod M before the
/// angle is evaluated so large e never reaches the trig functions.
inline cplx root_of_unity(std::size_t m, std::int64_t exponent) {
    const auto mm = static_cast<std::int64_t>(m);
    std::int64_t r = exponent % mm;
    if (r < 0) r += mm;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

/// Residue of z in [0, m).
inline std::size_t reduce_mod(std::int64_t z, std::size_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    std::int64_t r = z % mm;
    if (r < 0) r += mm;
    return static_cast<std::size_t>(r);
}

}  // namespace phasekick
