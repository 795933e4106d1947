#include <doctest.h>

#include "avogrip/errors.hpp"
#include "avogrip/fruit.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace avogrip;

TEST_CASE("cylinder_from_fruit halves the width") {
  const auto big = cylinder_from_fruit(0.0998, 0.1299, 0.3);
  CHECK(big.radius == doctest::Approx(0.0499).epsilon(1e-12));
  CHECK(big.height == 0.1299);
  CHECK(big.mass == 0.3);
  CHECK(cylinder_from_fruit(0.002, 0.002, 0.001).radius == doctest::Approx(0.001));
}

TEST_CASE("cylinder_from_fruit rejects non-positive fields by name") {
  auto field_of = [](double w, double h, double m) {
    try {
      cylinder_from_fruit(w, h, m);
    } catch (const DomainError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of(0.0, 0.1, 0.2) == "width");
  CHECK(field_of(0.1, -1.0, 0.2) == "height");
  CHECK(field_of(0.1, 0.1, 0.0) == "mass");
}

TEST_CASE("moment_of_inertia closed forms agree with volume quadrature") {
  const auto fruit = cylinder_from_fruit(0.0998, 0.1299, 0.3);
  const double it = moment_of_inertia(fruit, InertiaAxis::Transverse);
  const double il = moment_of_inertia(fruit, InertiaAxis::Longitudinal);
  CHECK(it == doctest::Approx(6.0860e-4).epsilon(1e-4));
  CHECK(il == doctest::Approx(3.7350e-4).epsilon(1e-4));
  CHECK(it == doctest::Approx(oracle::cylinder_inertia(0.0499, 0.1299, 0.3, true)).epsilon(1e-4));
  CHECK(il == doctest::Approx(oracle::cylinder_inertia(0.0499, 0.1299, 0.3, false)).epsilon(1e-4));
}

TEST_CASE("longitudinal inertia vanishes with the radius") {
  CylinderFruit thin{1e-9, 0.1, 0.3, "needle"};
  CHECK(moment_of_inertia(thin, InertiaAxis::Longitudinal) < 1e-18);
}

TEST_CASE("inertia scales linearly in mass and quadratically in size") {
  gen::Rng rng(11);
  for (int i = 0; i < gen::kCases; ++i) {
    const CylinderFruit f{rng.uniform(0.01, 0.1), rng.uniform(0.02, 0.2), rng.uniform(0.05, 1.0), ""};
    const double k = rng.uniform(0.2, 5.0);
    for (auto axis : {InertiaAxis::Longitudinal, InertiaAxis::Transverse}) {
      const double base = moment_of_inertia(f, axis);
      const CylinderFruit scaled{k * f.radius, k * f.height, f.mass, ""};
      const CylinderFruit heavier{f.radius, f.height, k * f.mass, ""};
      REQUIRE(gen::close_rel(moment_of_inertia(scaled, axis), k * k * base, 1e-12));
      REQUIRE(gen::close_rel(moment_of_inertia(heavier, axis), k * base, 1e-12));
    }
    if (f.height * f.height >= 3.0 * f.radius * f.radius)
      REQUIRE(moment_of_inertia(f, InertiaAxis::Transverse) >=
              moment_of_inertia(f, InertiaAxis::Longitudinal));
  }
}

TEST_CASE("default envelope bounds") {
  const auto env = default_size_envelope();
  CHECK(env.width.max == 0.0998);
  CHECK(env.height.min == 0.0645);
  CHECK(env.height.max == 0.1299);
  CHECK(env.width.min == 0.0538);
  CHECK(env.mass.min == 0.2);
  CHECK(env.mass.max == 0.3);
  CHECK_NOTHROW(env.validate());
  SizeEnvelope bad = env;
  bad.mass = {0.4, 0.3};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("transverse inertia peaks at the envelope's largest corner") {
  const auto env = default_size_envelope();
  const int n = 25;
  double best = 0.0, best_w = 0.0, best_h = 0.0, best_m = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const double w = env.width.min + (env.width.max - env.width.min) * i / n;
        const double h = env.height.min + (env.height.max - env.height.min) * j / n;
        const double m = env.mass.min + (env.mass.max - env.mass.min) * k / n;
        const double it = moment_of_inertia(cylinder_from_fruit(w, h, m), InertiaAxis::Transverse);
        if (it > best) best = it, best_w = w, best_h = h, best_m = m;
      }
  CHECK(best_w == doctest::Approx(env.width.max));
  CHECK(best_h == doctest::Approx(env.height.max));
  CHECK(best_m == doctest::Approx(env.mass.max));
}

TEST_CASE("viewpoint names round-trip and unknown names are rejected") {
  for (auto v : {Viewpoint::FV, Viewpoint::CV, Viewpoint::BV}) CHECK(parse_viewpoint(to_string(v)) == v);
  CHECK_THROWS_AS(parse_viewpoint("XX"), DomainError);
}
