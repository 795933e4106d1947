#include "avogrip/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "avogrip/errors.hpp"
#include "avogrip/units.hpp"

namespace avogrip {

std::string format_sig6(double value) {
  if (!std::isfinite(value)) return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

double sig6(double value) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  const std::string text = format_sig6(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

namespace {

double number(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(0, key, "missing key");
  const Json& v = doc.at(key);
  if (!v.is_number()) throw ParseError(0, key, "must be a number");
  return v.get<double>();
}

}  // namespace

GripperGeometry geometry_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(0, "geometry", "expected a JSON object");
  GripperGeometry g;
  g.ring_radius = units::mm_to_m(number(doc, "ring_radius_mm"));
  g.pinion_radius = units::mm_to_m(number(doc, "pinion_radius_mm"));
  g.finger_offset = units::mm_to_m(number(doc, "finger_offset_mm"));
  g.center_distance = units::mm_to_m(number(doc, "center_distance_mm"));
  const double n = number(doc, "finger_count");
  if (n != std::floor(n)) throw ParseError(0, "finger_count", "must be an integer");
  g.finger_count = static_cast<int>(n);
  g.finger_diameter = units::mm_to_m(number(doc, "finger_diameter_mm"));
  g.alpha_range = {units::deg_to_rad(number(doc, "alpha_min_deg")),
                   units::deg_to_rad(number(doc, "alpha_max_deg"))};
  g.validate();
  return g;
}

Json geometry_to_json(const GripperGeometry& g) {
  Json doc;
  doc["ring_radius_mm"] = sig6(units::m_to_mm(g.ring_radius));
  doc["pinion_radius_mm"] = sig6(units::m_to_mm(g.pinion_radius));
  doc["finger_offset_mm"] = sig6(units::m_to_mm(g.finger_offset));
  doc["center_distance_mm"] = sig6(units::m_to_mm(g.center_distance));
  doc["finger_count"] = g.finger_count;
  doc["finger_diameter_mm"] = sig6(units::m_to_mm(g.finger_diameter));
  doc["alpha_min_deg"] = sig6(units::rad_to_deg(g.alpha_range.min));
  doc["alpha_max_deg"] = sig6(units::rad_to_deg(g.alpha_range.max));
  return doc;
}

MotorSpec motor_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(0, "motor", "expected a JSON object");
  MotorSpec m;
  m.rated_torque = number(doc, "rated_torque_nm");
  m.safety_factor = doc.contains("safety_factor") ? number(doc, "safety_factor") : 1.0;
  if (doc.contains("worst_case_alpha_deg"))
    m.worst_case_alpha = units::deg_to_rad(number(doc, "worst_case_alpha_deg"));
  if (doc.contains("worst_case_fruit")) {
    const Json& f = doc.at("worst_case_fruit");
    m.worst_case_fruit = cylinder_from_fruit(units::mm_to_m(number(f, "width_mm")),
                                             units::mm_to_m(number(f, "height_mm")),
                                             number(f, "mass_kg"), "worst-case corner");
  }
  m.validate();
  return m;
}

Json motor_to_json(const MotorSpec& m) {
  Json doc;
  doc["rated_torque_nm"] = sig6(m.rated_torque);
  doc["safety_factor"] = sig6(m.safety_factor);
  doc["worst_case_alpha_deg"] = sig6(units::rad_to_deg(m.worst_case_alpha));
  doc["worst_case_fruit"] = {{"width_mm", sig6(units::m_to_mm(m.worst_case_fruit.width()))},
                             {"height_mm", sig6(units::m_to_mm(m.worst_case_fruit.height))},
                             {"mass_kg", sig6(m.worst_case_fruit.mass)}};
  return doc;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputNotFound("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path.filename().string(), e.what());
  }
}

GripperGeometry load_geometry(const std::filesystem::path& path) {
  return geometry_from_json(load_json_file(path));
}

MotorSpec load_motor(const std::filesystem::path& path) { return motor_from_json(load_json_file(path)); }

}  // namespace avogrip
