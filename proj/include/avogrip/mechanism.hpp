#pragma once

#include "avogrip/fruit.hpp"

namespace avogrip {

/// Dimensions of the five-finger internal-gear gripper.
///
/// A motor drives the internal ring gear (pitch radius `ring_radius`), which
/// meshes with `finger_count` pinions (pitch radius `pinion_radius`) whose
/// centers A sit at `center_distance` from the ring center O. Each finger
/// center B is offset `finger_offset` from its pinion center. `alpha` is the
/// angle at A between AO and AB, read directly from the motor encoder.
struct GripperGeometry {
  double ring_radius = 0.0;      // R [m]
  double pinion_radius = 0.0;    // r [m]
  double finger_offset = 0.0;    // l_AB [m]
  double center_distance = 0.0;  // l_OA [m]
  int finger_count = 5;
  double finger_diameter = 0.0;  // [m]
  Interval alpha_range;          // [rad]

  /// Throws DomainError naming the first violated invariant.
  void validate() const;
};

/// Small reference gripper used throughout the tests and examples:
/// R=50 mm, r=10 mm, l_AB=15 mm, l_OA=40 mm, n=5, finger 10 mm, alpha 13-110 deg.
GripperGeometry reference_geometry();

/// Larger gripper whose transmitting closure band covers 40.8-107.6 mm fruit
/// widths. R=120 mm, r=20 mm, l_AB=77 mm, l_OA=100 mm, n=5, finger 20 mm.
GripperGeometry harvest_geometry();

/// Per-finger result of pushing motor torque through the gear train.
struct FingerLoad {
  double tangent_force = 0.0;  // F_t = tau_M / R [N]
  double pinion_torque = 0.0;  // tau_1 = F_t r [N*m]
  double finger_force = 0.0;   // F = tau_1 / l_AB [N]
  /// The radial mesh component points at the pitch center and never adds moment.
  static constexpr bool radial_force_carries_moment = false;
};

/// Triangle ABO solved at one encoder angle.
struct FingerConfiguration {
  double alpha = 0.0;      // [rad]
  double d = 0.0;          // |OB| [m]
  double angle_abo = 0.0;  // [rad]
  double gamma = 0.0;      // angle_abo - pi/2 [rad]
  double theta = 0.0;      // pi/2 - gamma, between F and the finger-circle tangent [rad]
};

/// Throws DomainError for negative torque.
FingerLoad finger_drive_force(const GripperGeometry& geom, double motor_torque);

/// Throws RangeError outside alpha_range, DegenerateConfiguration if B lands on O.
FingerConfiguration finger_configuration(const GripperGeometry& geom, double alpha);

/// asin(l_OA sin(alpha) / d). Only valid while angle ABO is acute; kept for
/// cross-checking the law-of-cosines solution.
double angle_abo_asin(const GripperGeometry& geom, double alpha);

/// Analytic d'(alpha) = l_AB l_OA sin(alpha) / d.
double finger_distance_derivative(const GripperGeometry& geom, double alpha);

/// Moment of one finger about O: F cos(theta) d. Signed, negative when the
/// force component opposes closing.
double finger_moment(const GripperGeometry& geom, double motor_torque, double alpha);

/// n F cos(theta) d, signed.
double total_grasp_moment(const GripperGeometry& geom, double motor_torque, double alpha);

/// Opening between finger centerlines less one finger diameter: 2 d - finger_diameter.
double aperture(const GripperGeometry& geom, double alpha);

/// Inverse of aperture() by bisection. Throws UnreachableAperture carrying the
/// achievable interval when `opening` cannot be produced inside alpha_range.
double alpha_for_aperture(const GripperGeometry& geom, double opening);

}  // namespace avogrip
