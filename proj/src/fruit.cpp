#include "avogrip/fruit.hpp"

#include "avogrip/errors.hpp"

namespace avogrip {

std::string_view to_string(Viewpoint v) {
  switch (v) {
    case Viewpoint::FV: return "FV";
    case Viewpoint::CV: return "CV";
    case Viewpoint::BV: return "BV";
  }
  return "?";
}

Viewpoint parse_viewpoint(std::string_view text) {
  if (text == "FV") return Viewpoint::FV;
  if (text == "CV") return Viewpoint::CV;
  if (text == "BV") return Viewpoint::BV;
  throw DomainError("viewpoint", "expected FV, CV or BV, got '" + std::string(text) + "'");
}

CylinderFruit cylinder_from_fruit(double width, double height, double mass, std::string label) {
  if (!(width > 0.0)) throw DomainError("width", "must be positive");
  if (!(height > 0.0)) throw DomainError("height", "must be positive");
  if (!(mass > 0.0)) throw DomainError("mass", "must be positive");
  return CylinderFruit{width / 2.0, height, mass, std::move(label)};
}

double moment_of_inertia(const CylinderFruit& fruit, InertiaAxis axis) {
  const double r2 = fruit.radius * fruit.radius;
  switch (axis) {
    case InertiaAxis::Longitudinal:
      return fruit.mass * r2 / 2.0;
    case InertiaAxis::Transverse:
      return fruit.mass * (3.0 * r2 + fruit.height * fruit.height) / 12.0;
  }
  return 0.0;
}

void SizeEnvelope::validate() const {
  auto check = [](const Interval& i, const char* name) {
    if (!(i.min > 0.0)) throw DomainError(name, "lower bound must be positive");
    if (!(i.min <= i.max)) throw DomainError(name, "min exceeds max");
  };
  check(height, "height_range");
  check(width, "width_range");
  check(mass, "mass_range");
}

SizeEnvelope default_size_envelope() {
  return SizeEnvelope{{0.0645, 0.1299}, {0.0538, 0.0998}, {0.2, 0.3}};
}

SizeEnvelope point_envelope(const CylinderFruit& fruit) {
  return SizeEnvelope{{fruit.height, fruit.height},
                      {fruit.width(), fruit.width()},
                      {fruit.mass, fruit.mass}};
}

}  // namespace avogrip
