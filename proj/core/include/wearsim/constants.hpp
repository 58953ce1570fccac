#pragma once

namespace wearsim {

// Physical constants (SI).
inline constexpr double kSpeedOfLight = 2.99792458e8;     // m/s
inline constexpr double kVacuumPermittivity = 8.854187817e-12; // F/m
inline constexpr double kVacuumPermeability = 1.25663706212e-6; // H/m
inline constexpr double kFreeSpaceImpedance = 376.730313668;   // ohm
inline constexpr double kPi = 3.14159265358979323846;

// Fixed air density used for any air cell that enters a mass budget.
inline constexpr double kAirDensity = 1.2; // kg/m^3

} // namespace wearsim
