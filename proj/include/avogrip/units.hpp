#pragma once

#include <numbers>

// Everything inside the library is SI (m, kg, N, N*m, rad, s). Millimeters and
// degrees only appear at file and command-line boundaries.
namespace avogrip::units {

constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
constexpr double mm_to_m(double mm) { return mm / 1000.0; }
constexpr double m_to_mm(double m) { return m * 1000.0; }

constexpr double kStandardAtmosphere = 101325.0;  // [Pa]
constexpr double kDefaultWristSpeed = 0.326;       // [rad/s], arm manufacturer default

}  // namespace avogrip::units
