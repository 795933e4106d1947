#include "avogrip/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avogrip/errors.hpp"
#include "avogrip/units.hpp"

namespace avogrip {

namespace {

using units::kPi;

double distance_unchecked(const GripperGeometry& g, double alpha) {
  const double ab = g.finger_offset;
  const double oa = g.center_distance;
  const double d2 = ab * ab + oa * oa - 2.0 * ab * oa * std::cos(alpha);
  return std::sqrt(std::max(d2, 0.0));
}

void require_alpha(const GripperGeometry& g, double alpha) {
  if (!g.alpha_range.contains(alpha)) {
    std::ostringstream os;
    os << "alpha " << units::rad_to_deg(alpha) << " deg outside ["
       << units::rad_to_deg(g.alpha_range.min) << ", " << units::rad_to_deg(g.alpha_range.max)
       << "] deg";
    throw RangeError(alpha, g.alpha_range.min, g.alpha_range.max, os.str());
  }
}

}  // namespace

void GripperGeometry::validate() const {
  if (!(ring_radius > 0.0)) throw DomainError("ring_radius", "must be positive");
  if (!(pinion_radius > 0.0)) throw DomainError("pinion_radius", "must be positive");
  if (!(finger_offset > 0.0)) throw DomainError("finger_offset", "must be positive");
  if (!(center_distance > 0.0)) throw DomainError("center_distance", "must be positive");
  if (!(finger_diameter > 0.0)) throw DomainError("finger_diameter", "must be positive");
  if (finger_count < 2) throw DomainError("finger_count", "at least two fingers required");
  if (!(pinion_radius < ring_radius))
    throw DomainError("pinion_radius", "must be smaller than ring_radius");
  if (!(center_distance > finger_offset))
    throw DomainError("center_distance", "must exceed finger_offset");
  if (!(alpha_range.min > 0.0 && alpha_range.max < kPi && alpha_range.min <= alpha_range.max))
    throw DomainError("alpha_range", "must satisfy 0 < min <= max < pi");
}

GripperGeometry reference_geometry() {
  return GripperGeometry{0.05, 0.01, 0.015, 0.04, 5, 0.01,
                         {units::deg_to_rad(13.0), units::deg_to_rad(110.0)}};
}

GripperGeometry harvest_geometry() {
  return GripperGeometry{0.12, 0.02, 0.077, 0.10, 5, 0.02,
                         {units::deg_to_rad(13.0), units::deg_to_rad(110.0)}};
}

FingerLoad finger_drive_force(const GripperGeometry& geom, double motor_torque) {
  if (!(motor_torque >= 0.0)) throw DomainError("motor_torque", "must be non-negative");
  FingerLoad load;
  load.tangent_force = motor_torque / geom.ring_radius;
  load.pinion_torque = load.tangent_force * geom.pinion_radius;
  load.finger_force = load.pinion_torque / geom.finger_offset;
  return load;
}

FingerConfiguration finger_configuration(const GripperGeometry& geom, double alpha) {
  require_alpha(geom, alpha);
  const double ab = geom.finger_offset;
  const double oa = geom.center_distance;
  const double d = distance_unchecked(geom, alpha);
  if (d <= 1e-12 * (ab + oa)) throw DegenerateConfiguration("finger center coincides with ring center");

  // Cosine from the law of cosines fixes the branch; the law-of-sines sine keeps
  // precision near 0 and pi where acos alone would lose digits.
  const double cos_abo = (ab * ab + d * d - oa * oa) / (2.0 * ab * d);
  const double sin_abo = oa * std::sin(alpha) / d;

  FingerConfiguration c;
  c.alpha = alpha;
  c.d = d;
  c.angle_abo = std::atan2(std::clamp(sin_abo, 0.0, 1.0), std::clamp(cos_abo, -1.0, 1.0));
  c.gamma = c.angle_abo - kPi / 2.0;
  c.theta = kPi / 2.0 - c.gamma;
  return c;
}

double angle_abo_asin(const GripperGeometry& geom, double alpha) {
  const double d = distance_unchecked(geom, alpha);
  return std::asin(std::clamp(geom.center_distance * std::sin(alpha) / d, -1.0, 1.0));
}

double finger_distance_derivative(const GripperGeometry& geom, double alpha) {
  const double d = distance_unchecked(geom, alpha);
  return geom.finger_offset * geom.center_distance * std::sin(alpha) / d;
}

double finger_moment(const GripperGeometry& geom, double motor_torque, double alpha) {
  const FingerConfiguration c = finger_configuration(geom, alpha);
  return finger_drive_force(geom, motor_torque).finger_force * std::cos(c.theta) * c.d;
}

double total_grasp_moment(const GripperGeometry& geom, double motor_torque, double alpha) {
  const FingerConfiguration c = finger_configuration(geom, alpha);
  const FingerLoad load = finger_drive_force(geom, motor_torque);
  return static_cast<double>(geom.finger_count) * load.finger_force * std::cos(c.theta) * c.d;
}

double aperture(const GripperGeometry& geom, double alpha) {
  require_alpha(geom, alpha);
  return 2.0 * distance_unchecked(geom, alpha) - geom.finger_diameter;
}

double alpha_for_aperture(const GripperGeometry& geom, double opening) {
  double lo = geom.alpha_range.min;
  double hi = geom.alpha_range.max;
  const double open_lo = aperture(geom, lo);
  const double open_hi = aperture(geom, hi);
  if (!(opening >= open_lo && opening <= open_hi)) {
    std::ostringstream os;
    os << "opening " << units::m_to_mm(opening) << " mm outside achievable ["
       << units::m_to_mm(open_lo) << ", " << units::m_to_mm(open_hi) << "] mm";
    throw UnreachableAperture(opening, open_lo, open_hi, os.str());
  }
  if (opening == open_lo) return lo;
  if (opening == open_hi) return hi;

  // aperture() is strictly increasing on (0, pi).
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f = 2.0 * distance_unchecked(geom, mid) - geom.finger_diameter - opening;
    if (std::abs(f) < 1e-13) return mid;
    (f < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace avogrip
