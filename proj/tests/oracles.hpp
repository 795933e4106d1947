#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library's numeric code paths; each routine takes a different route to the
// same quantity (coordinates instead of closed forms, quadrature instead of
// formulas, dense enumeration instead of search).

#include <cmath>
#include <numbers>

namespace oracle {

constexpr double kPi = std::numbers::pi;

inline double deg(double d) { return d * kPi / 180.0; }

// Solid cylinder inertia by midpoint quadrature over (s, phi, z), unit density
// scaled to the given mass. Axis through the centroid: longitudinal = z,
// transverse = x.
inline double cylinder_inertia(double r, double h, double m, bool transverse, int n = 120) {
  const double ds = r / n, dphi = 2.0 * kPi / n, dz = h / n;
  double integral = 0.0, volume = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = (i + 0.5) * ds;
    for (int j = 0; j < n; ++j) {
      const double phi = (j + 0.5) * dphi;
      const double y = s * std::sin(phi);
      for (int k = 0; k < n; ++k) {
        const double z = -h / 2.0 + (k + 0.5) * dz;
        const double dv = s * ds * dphi * dz;
        const double dist2 = transverse ? y * y + z * z : s * s;
        integral += dist2 * dv;
        volume += dv;
      }
    }
  }
  return m * integral / volume;
}

struct Point {
  double x, y;
};

// Triangle ABO built from coordinates: O at origin, pinion center A on +x,
// finger center B rotated by alpha from AO about A.
struct Chain {
  double d;
  double angle_abo;
  double theta;
  double finger_force;
  double moment;
};

inline Chain brute_force_chain(double R, double r, double l_ab, double l_oa, int n, double torque,
                               double alpha) {
  const Point O{0.0, 0.0};
  const Point A{l_oa, 0.0};
  // AO points along -x; rotate it by alpha (counter-clockwise) to get AB.
  const Point B{A.x - l_ab * std::cos(alpha), A.y + l_ab * std::sin(alpha)};
  const double bax = A.x - B.x, bay = A.y - B.y;
  const double box = O.x - B.x, boy = O.y - B.y;
  Chain c{};
  c.d = std::hypot(B.x, B.y);
  c.angle_abo = std::atan2(std::abs(bax * boy - bay * box), bax * box + bay * boy);
  const double gamma = c.angle_abo - kPi / 2.0;
  c.theta = kPi / 2.0 - gamma;
  const double ft = torque / R;
  const double tau1 = ft * r;
  c.finger_force = tau1 / l_ab;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += c.finger_force * std::cos(c.theta) * c.d;
  c.moment = sum;
  return c;
}

}  // namespace oracle
