#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "capdisc/errors.hpp"
#include "capdisc/geometry.hpp"
#include "oracles.hpp"

using namespace capdisc;

namespace {

bool near(const UnitVector& v, double x, double y, double z, double tol = 1e-15) {
  return std::abs(v.x() - x) <= tol && std::abs(v.y() - y) <= tol && std::abs(v.z() - z) <= tol;
}

Vec3 to_vec(const UnitVector& v) { return v.vec(); }

}  // namespace

TEST_CASE("polar_to_cartesian reference directions") {
  CHECK(near(polar_to_cartesian({0.0, kHalfPi}), 0, 0, 1));
  CHECK(near(polar_to_cartesian({0.0, 0.0}), 1, 0, 0));
  CHECK(near(polar_to_cartesian({kHalfPi, 0.0}), 0, 1, 0));
}

TEST_CASE("cartesian_to_polar reference directions") {
  auto p = cartesian_to_polar(UnitVector{});
  CHECK(p.theta == 0.0);
  CHECK(p.phi == doctest::Approx(kHalfPi));
  p = cartesian_to_polar(UnitVector::from_components(1, 0, 0));
  CHECK(p.theta == 0.0);
  CHECK(p.phi == 0.0);
  p = cartesian_to_polar(UnitVector::from_components(0, -1, 0));
  CHECK(p.theta == doctest::Approx(3 * kHalfPi).epsilon(1e-15));
  CHECK(p.phi == 0.0);
  p = cartesian_to_polar(-UnitVector{});
  CHECK(p.theta == 0.0);
  CHECK(p.phi == doctest::Approx(-kHalfPi));
}

TEST_CASE("polar round trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> th(0.0, kTwoPi), ph(-kHalfPi + 1e-6, kHalfPi - 1e-6);
  for (int i = 0; i < 20000; ++i) {
    const PolarDirection d{th(rng), ph(rng)};
    const auto v = polar_to_cartesian(d);
    CHECK(std::abs(norm(v.vec()) - 1.0) <= 1e-12);
    const auto back = cartesian_to_polar(v);
    double dtheta = std::abs(back.theta - d.theta);
    dtheta = std::min(dtheta, kTwoPi - dtheta);
    CHECK(dtheta <= 1e-9);
    CHECK(std::abs(back.phi - d.phi) <= 1e-9);
    const auto again = polar_to_cartesian(back);
    CHECK(oracle::dist(again.vec(), v.vec()) <= 1e-9);
  }
}

TEST_CASE("cap_area_fraction") {
  CHECK(cap_area_fraction(0.0) == 0.5);
  CHECK(cap_area_fraction(1.0) == 0.0);
  CHECK(cap_area_fraction(-1.0) == 1.0);
  CHECK_THROWS_AS(cap_area_fraction(1.5), std::invalid_argument);
  CHECK_THROWS_AS(cap_area_fraction(-1.0000001), std::invalid_argument);
}

TEST_CASE("chord_distance") {
  const UnitVector e1 = UnitVector::from_components(1, 0, 0);
  const UnitVector e2 = UnitVector::from_components(0, 1, 0);
  CHECK(chord_distance(e1, e1) == 0.0);
  CHECK(chord_distance(e1, -e1) == doctest::Approx(2.0));
  CHECK(chord_distance(e1, e2) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("unit vector construction") {
  CHECK_THROWS_AS(UnitVector::from_components(0, 0, 2), NonUnitPoint);
  CHECK_THROWS_AS(UnitVector::from_components(0, 0, 1.00001), NonUnitPoint);
  const auto v = UnitVector::from_components(0, 0, 1.0 + 1e-7);
  CHECK(v.z() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(UnitVector::normalize({0, 0, 0}), std::invalid_argument);
  const auto w = UnitVector::normalize({3, 4, 0});
  CHECK(near(w, 0.6, 0.8, 0.0, 1e-15));
}

TEST_CASE("region validation") {
  CHECK_NOTHROW(Region{}.validate());
  CHECK_THROWS_AS((Region{0.5, 0.2, 0, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Region{0, 1, 2, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Region{0, 2, 0, 1}.validate()), std::invalid_argument);
}

TEST_CASE("cover cap centers: layout") {
  const UnitVector pole;
  for (double r : {0.1, 0.7, 1.0, std::sqrt(2.0)}) {
    const auto c = cover_cap_centers(pole, r);
    CHECK(c[0] == pole);
    for (int i = 1; i < 8; ++i) {
      CHECK(std::abs(chord_distance(c[i], pole) - 0.86 * r) <= 1e-12);
      CHECK(std::abs(norm(c[i].vec()) - 1.0) <= 1e-12);
    }
    // equal spacing around the ring
    const double side = chord_distance(c[1], c[2]);
    for (int i = 1; i < 8; ++i) CHECK(std::abs(chord_distance(c[i], c[i % 7 + 1]) - side) <= 1e-12);
  }
  CHECK(cover_cap_ring_latitude(1.0) == doctest::Approx(std::asin((2 - 0.86 * 0.86) / 2)));
  CHECK_THROWS_AS(cover_cap_centers(pole, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cover_cap_centers(pole, 1.5), std::invalid_argument);
  CHECK_NOTHROW(cover_cap_centers(pole, std::sqrt(2.0)));
}

TEST_CASE("cover cap centers: Monte Carlo coverage") {
  std::mt19937_64 rng(2024);
  for (double r : {0.05, 0.1, 0.5, 1.0, 1.4, std::sqrt(2.0)}) {
    CAPTURE(r);
    const auto center = UnitVector::normalize(oracle::gaussian_direction(rng));
    const auto c = cover_cap_centers(center, r);
    int failures = 0;
    for (int i = 0; i < 100000; ++i) {
      const Vec3 x = oracle::sample_cap(center.vec(), r, rng);
      bool hit = false;
      for (const auto& k : c) hit = hit || oracle::dist(x, k.vec()) <= r / 2;
      failures += hit ? 0 : 1;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("cover cap centers: rotation invariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto center = UnitVector::normalize(oracle::gaussian_direction(rng));
    const auto rot = oracle::random_rotation(rng);
    const auto turned = UnitVector::normalize(oracle::apply(rot, center.vec()));
    const double r = 0.05 + 1.3 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto a = cover_cap_centers(center, r);
    const auto b = cover_cap_centers(turned, r);
    std::vector<double> da, db;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        da.push_back(chord_distance(a[i], a[j]));
        db.push_back(chord_distance(b[i], b[j]));
      }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    for (std::size_t i = 0; i < da.size(); ++i) CHECK(std::abs(da[i] - db[i]) <= 1e-12);
    // and the rotated set is the rotation of the set, up to the ring's phase
    for (int i = 1; i < 8; ++i) CHECK(std::abs(chord_distance(b[i], turned) - 0.86 * r) <= 1e-12);
  }
}

TEST_CASE("cover cap: consecutive satellite caps meet inside the center cap and outside the big cap") {
  // Upper intersection lies within chord r/2 of the center (sin >= 1 - r^2/8),
  // lower one beyond chord r (sin <= 1 - r^2/2).
  const UnitVector pole;
  for (int k = 1; k <= 400; ++k) {
    const double r = std::sqrt(2.0) * k / 400.0;
    CAPTURE(r);
    const auto c = cover_cap_centers(pole, r);
    const double level = 1.0 - (r / 2) * (r / 2) / 2.0;
    const auto hits = oracle::circle_intersections(c[1].vec(), c[2].vec(), level, level);
    REQUIRE(hits.has_value());
    const double zu = std::max(hits->first.z, hits->second.z);
    const double zd = std::min(hits->first.z, hits->second.z);
    CHECK(zu >= 1.0 - r * r / 8.0 - 1e-9);
    CHECK(zd <= 1.0 - r * r / 2.0 + 1e-9);
  }
}

TEST_CASE("frame_with_pole is orthonormal and right handed") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = UnitVector::normalize(oracle::gaussian_direction(rng));
    const auto f = frame_with_pole(p);
    CHECK(std::abs(dot(f.e1, f.e2)) <= 1e-14);
    CHECK(std::abs(dot(f.e1, f.e3)) <= 1e-14);
    CHECK(std::abs(norm(f.e1) - 1) <= 1e-14);
    CHECK(oracle::dist(cross(f.e1, f.e2), f.e3) <= 1e-14);
    CHECK(oracle::dist(f.e3, to_vec(p)) <= 1e-15);
    CHECK(oracle::dist(f.to_global({0.0, kHalfPi}).vec(), p.vec()) <= 1e-15);
  }
}
