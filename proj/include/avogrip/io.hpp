#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "avogrip/mechanism.hpp"
#include "avogrip/sizing.hpp"

namespace avogrip {

using Json = nlohmann::ordered_json;

/// Rounds to 6 significant digits so that emitted reports are stable text.
double sig6(double value);

/// Same rounding rendered through "%.6g"-style formatting, locale independent.
std::string format_sig6(double value);

/// Geometry documents use millimeters and degrees:
///   ring_radius_mm, pinion_radius_mm, finger_offset_mm, center_distance_mm,
///   finger_count, finger_diameter_mm, alpha_min_deg, alpha_max_deg
/// The result is validated.
GripperGeometry geometry_from_json(const Json& doc);
Json geometry_to_json(const GripperGeometry& geom);

/// Motor documents: rated_torque_nm, safety_factor, and optionally
/// worst_case_alpha_deg plus worst_case_fruit {width_mm, height_mm, mass_kg}.
MotorSpec motor_from_json(const Json& doc);
Json motor_to_json(const MotorSpec& motor);

/// Reads and parses a JSON file. Throws InputNotFound or ParseError.
Json load_json_file(const std::filesystem::path& path);

GripperGeometry load_geometry(const std::filesystem::path& path);
MotorSpec load_motor(const std::filesystem::path& path);

}  // namespace avogrip
