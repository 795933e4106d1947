#include "avogrip/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "avogrip/errors.hpp"

namespace avogrip {

void MotorSpec::validate() const {
  if (!(rated_torque >= 0.0)) throw DomainError("rated_torque", "must be non-negative");
  if (!(safety_factor >= 1.0)) throw DomainError("safety_factor", "must be at least 1");
}

DetachBudget detach_budget(const CylinderFruit& fruit, double detach_force, double angular_accel,
                           double lever_fraction) {
  if (!(detach_force >= 0.0)) throw DomainError("detach_force", "must be non-negative");
  if (!(angular_accel >= 0.0)) throw DomainError("angular_accel", "must be non-negative");
  if (!(lever_fraction > 0.0)) throw DomainError("lever_fraction", "must be positive");
  DetachBudget b;
  b.holding_moment = detach_force * fruit.height * lever_fraction;
  b.inertial_moment = moment_of_inertia(fruit, InertiaAxis::Transverse) * angular_accel;
  b.total = b.holding_moment + b.inertial_moment;
  return b;
}

double required_motor_torque(const GripperGeometry& geom, double alpha, double target_moment) {
  if (!(target_moment >= 0.0)) throw DomainError("target_moment", "must be non-negative");
  const FingerConfiguration c = finger_configuration(geom, alpha);
  const double arm = std::cos(c.theta) * c.d;
  if (!(arm > 0.0)) {
    std::ostringstream os;
    os << "configuration at alpha " << units::rad_to_deg(alpha)
       << " deg cannot transmit a closing moment (cos(theta) <= 0)";
    throw NonTransmittingConfiguration(os.str());
  }
  return target_moment * geom.ring_radius * geom.finger_offset /
         (geom.finger_count * geom.pinion_radius * arm);
}

std::vector<CylinderFruit> envelope_corners(const SizeEnvelope& envelope) {
  std::vector<CylinderFruit> corners;
  corners.reserve(8);
  for (double h : {envelope.height.min, envelope.height.max})
    for (double w : {envelope.width.min, envelope.width.max})
      for (double m : {envelope.mass.min, envelope.mass.max})
        corners.push_back(CylinderFruit{w / 2.0, h, m, "corner"});
  return corners;
}

Interval closure_band(const GripperGeometry& geom, const SizeEnvelope& envelope) {
  return Interval{alpha_for_aperture(geom, envelope.width.min),
                  alpha_for_aperture(geom, envelope.width.max)};
}

std::vector<SizingSample> sizing_grid(const GripperGeometry& geom, const SizeEnvelope& envelope,
                                      double detach_force, double angular_accel, double step) {
  envelope.validate();
  if (!(step > 0.0)) throw DomainError("step", "must be positive");
  const Interval band = closure_band(geom, envelope);
  const std::vector<CylinderFruit> corners = envelope_corners(envelope);

  std::vector<double> alphas;
  for (std::size_t k = 0;; ++k) {
    const double a = band.min + static_cast<double>(k) * step;
    if (a >= band.max) break;
    alphas.push_back(a);
  }
  alphas.push_back(band.max);

  std::vector<double> budgets;
  for (const auto& fruit : corners)
    budgets.push_back(detach_budget(fruit, detach_force, angular_accel).total);

  std::vector<SizingSample> samples;
  samples.reserve(alphas.size() * corners.size());
  for (double a : alphas)
    for (std::size_t i = 0; i < corners.size(); ++i)
      samples.push_back(SizingSample{a, i, budgets[i], required_motor_torque(geom, a, budgets[i])});
  return samples;
}

const SizingSample& select_worst(std::span<const SizingSample> samples) {
  if (samples.empty()) throw DomainError("samples", "empty sizing grid");
  const SizingSample* best = &samples.front();
  for (const auto& s : samples) {
    const bool better =
        s.required_torque > best->required_torque ||
        (s.required_torque == best->required_torque &&
         (s.alpha < best->alpha || (s.alpha == best->alpha && s.corner < best->corner)));
    if (better) best = &s;
  }
  return *best;
}

namespace {

// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 < f2 ? x2 : x1;
}

}  // namespace

MotorSpec size_motor(const GripperGeometry& geom, const SizeEnvelope& envelope, double detach_force,
                     double angular_accel, double safety_factor) {
  if (!(safety_factor >= 1.0)) throw DomainError("safety_factor", "must be at least 1");
  const std::vector<SizingSample> grid = sizing_grid(geom, envelope, detach_force, angular_accel);
  const SizingSample coarse = select_worst(grid);
  const Interval band = closure_band(geom, envelope);
  const std::vector<CylinderFruit> corners = envelope_corners(envelope);

  // Budgets do not depend on alpha, so the worst corner stays fixed while alpha is refined.
  const double budget = coarse.budget;
  const double step = units::deg_to_rad(1.0);
  const double lo = std::max(band.min, coarse.alpha - step);
  const double hi = std::min(band.max, coarse.alpha + step);
  auto torque_at = [&](double a) { return required_motor_torque(geom, a, budget); };

  double best_alpha = coarse.alpha;
  double best_torque = coarse.required_torque;
  if (hi > lo) {
    const double refined = golden_section_max(torque_at, lo, hi, 1e-4);
    // Check the bracket ends too: the maximum of a monotone torque curve sits on one.
    for (double a : {refined, lo, hi}) {
      const double t = torque_at(a);
      if (t > best_torque) {
        best_torque = t;
        best_alpha = a;
      }
    }
  }

  MotorSpec spec;
  spec.rated_torque = safety_factor * best_torque;
  spec.safety_factor = safety_factor;
  spec.worst_case_alpha = best_alpha;
  spec.worst_case_fruit = corners[coarse.corner];
  spec.worst_case_fruit.label = "worst-case corner";
  return spec;
}

double detach_time(double rotation_deg, double wrist_speed) {
  if (!(rotation_deg >= 0.0)) throw DomainError("rotation", "must be non-negative");
  if (!(wrist_speed > 0.0)) throw DomainError("wrist_speed", "must be positive");
  return units::deg_to_rad(rotation_deg) / wrist_speed;
}

double suction_force(double vacuum_pressure, double effective_diameter, double atmospheric) {
  if (!(vacuum_pressure >= 0.0)) throw DomainError("vacuum_pressure", "must be non-negative");
  if (!(vacuum_pressure < atmospheric))
    throw DomainError("vacuum_pressure", "must be below atmospheric pressure");
  if (!(effective_diameter > 0.0)) throw DomainError("effective_diameter", "must be positive");
  const double radius = effective_diameter / 2.0;
  return (atmospheric - vacuum_pressure) * units::kPi * radius * radius;
}

double suction_effective_diameter(double force, double vacuum_pressure, double atmospheric) {
  if (!(force > 0.0)) throw DomainError("force", "must be positive");
  if (!(vacuum_pressure >= 0.0 && vacuum_pressure < atmospheric))
    throw DomainError("vacuum_pressure", "must lie in [0, atmospheric)");
  return 2.0 * std::sqrt(force / ((atmospheric - vacuum_pressure) * units::kPi));
}

}  // namespace avogrip
