#pragma once

// Internal unit system: hbar = 1, energies are angular frequencies (rad/s),
// lengths in meters.  Keeping the whole pipeline in rad/s removes hbar
// bookkeeping from every equation of motion.
namespace kinpol::constants {

inline constexpr double speed_of_light = 2.99792458e8;     // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double hbar_si = 1.054571817e-34;         // J*s
inline constexpr double dipole_au = 8.4783536255e-30;      // C*m per atomic unit
inline constexpr double two_pi = 6.283185307179586476925286766559;

}  // namespace kinpol::constants
