#pragma once

#include <span>
#include <vector>

#include "avogrip/fruit.hpp"
#include "avogrip/mechanism.hpp"
#include "avogrip/units.hpp"

namespace avogrip {

/// Output of motor selection: the torque rating and where the worst case sits.
struct MotorSpec {
  double rated_torque = 0.0;  // [N*m]
  double safety_factor = 1.0;
  double worst_case_alpha = 0.0;  // [rad]
  CylinderFruit worst_case_fruit;

  void validate() const;
};

/// Moment needed at the calyx to detach a fruit: static pull plus inertial term.
struct DetachBudget {
  double holding_moment = 0.0;   // [N*m]
  double inertial_moment = 0.0;  // [N*m]
  double total = 0.0;            // [N*m]
};

/// Fraction of fruit height used as the lever from centroid to calyx.
inline constexpr double kDefaultLeverFraction = 0.5;

DetachBudget detach_budget(const CylinderFruit& fruit, double detach_force, double angular_accel,
                           double lever_fraction = kDefaultLeverFraction);

/// Motor torque that makes total_grasp_moment() equal `target_moment` at alpha.
/// Throws NonTransmittingConfiguration where cos(theta) <= 0.
double required_motor_torque(const GripperGeometry& geom, double alpha, double target_moment);

/// One evaluated point of the sizing search.
struct SizingSample {
  double alpha = 0.0;           // [rad]
  std::size_t corner = 0;       // index into envelope_corners()
  double budget = 0.0;          // detach budget total [N*m]
  double required_torque = 0.0; // [N*m]
};

/// The 8 (height, width, mass) corner fruits of an envelope, in a fixed order.
std::vector<CylinderFruit> envelope_corners(const SizeEnvelope& envelope);

/// Encoder angles at which the narrowest and widest envelope fruit are held.
/// Throws UnreachableAperture when the gripper cannot close on either extreme.
Interval closure_band(const GripperGeometry& geom, const SizeEnvelope& envelope);

/// Coarse search grid: closure band sampled every `step` plus its upper end,
/// crossed with every envelope corner.
std::vector<SizingSample> sizing_grid(const GripperGeometry& geom, const SizeEnvelope& envelope,
                                      double detach_force, double angular_accel,
                                      double step = units::deg_to_rad(1.0));

/// Largest required torque; ties go to the smaller alpha then smaller corner,
/// so the pick does not depend on sample order.
const SizingSample& select_worst(std::span<const SizingSample> samples);

/// Worst-case motor torque over the envelope's closure band, times the safety
/// factor. A 1 deg grid locates the maximum, golden-section refines it to 1e-4 rad.
MotorSpec size_motor(const GripperGeometry& geom, const SizeEnvelope& envelope, double detach_force,
                     double angular_accel, double safety_factor);

/// Time [s] for the wrist to turn `rotation_deg` at `wrist_speed` [rad/s].
double detach_time(double rotation_deg, double wrist_speed = units::kDefaultWristSpeed);

/// Vacuum holding force (atmospheric - vacuum) * pi (d/2)^2 [N].
double suction_force(double vacuum_pressure, double effective_diameter,
                     double atmospheric = units::kStandardAtmosphere);

/// Diameter [m] at which suction_force() would equal `force`.
double suction_effective_diameter(double force, double vacuum_pressure,
                                  double atmospheric = units::kStandardAtmosphere);

}  // namespace avogrip
