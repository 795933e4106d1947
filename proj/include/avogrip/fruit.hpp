#pragma once

#include <string>
#include <string_view>
#include <utility>

namespace avogrip {

enum class Viewpoint { FV, CV, BV };

std::string_view to_string(Viewpoint v);
/// Parses "FV", "CV" or "BV". Throws DomainError("viewpoint") otherwise.
Viewpoint parse_viewpoint(std::string_view text);

enum class InertiaAxis { Longitudinal, Transverse };

/// Solid cylinder standing in for an avocado. Radius is half the measured width.
struct CylinderFruit {
  double radius = 0.0;  // [m]
  double height = 0.0;  // [m]
  double mass = 0.0;    // [kg]
  std::string label;

  double width() const { return 2.0 * radius; }
};

/// Builds a fruit from width/height/mass, rejecting non-positive values.
CylinderFruit cylinder_from_fruit(double width, double height, double mass, std::string label = {});

/// Centroidal moment of inertia [kg*m^2].
///   longitudinal: m r^2 / 2
///   transverse:   m (3 r^2 + h^2) / 12
double moment_of_inertia(const CylinderFruit& fruit, InertiaAxis axis);

struct Interval {
  double min = 0.0;
  double max = 0.0;

  bool contains(double x) const { return x >= min && x <= max; }
};

/// Cultivar size/mass bounds used for worst-case sizing.
struct SizeEnvelope {
  Interval height;  // [m]
  Interval width;   // [m]
  Interval mass;    // [kg]

  void validate() const;
};

/// Height 64.5-129.9 mm, width 53.8-99.8 mm, mass 0.2-0.3 kg.
SizeEnvelope default_size_envelope();

/// Degenerate envelope containing exactly one fruit.
SizeEnvelope point_envelope(const CylinderFruit& fruit);

}  // namespace avogrip
