#include "capdisc/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "capdisc/errors.hpp"

namespace capdisc {

UnitVector UnitVector::from_components(double x, double y, double z) {
  const Vec3 v{x, y, z};
  const double n = norm(v);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitNormTolerance) throw NonUnitPoint(n);
  // Already unit up to rounding: keep the bits so files round-trip exactly.
  if (std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return UnitVector(v);
  return UnitVector((1.0 / n) * v);
}

UnitVector UnitVector::normalize(const Vec3& v) {
  const double n = norm(v);
  if (!std::isfinite(n) || n == 0.0) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  return UnitVector((1.0 / n) * v);
}

UnitVector UnitVector::assume_unit(const Vec3& v) {
  const double n = norm(v);
  if (!(std::abs(n - 1.0) <= 1e-12)) throw NonUnitPoint(n);
  return UnitVector(v);
}

void Region::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid region: " + what); };
  constexpr double slack = 1e-12;
  if (!(std::isfinite(phi_min) && std::isfinite(phi_max) && std::isfinite(theta_min) && std::isfinite(theta_max)))
    fail("non-finite bound");
  if (phi_min > phi_max) fail("phi_min > phi_max");
  if (theta_min > theta_max) fail("theta_min > theta_max");
  if (phi_min < -kHalfPi - slack || phi_max > kHalfPi + slack) fail("latitude outside [-pi/2, pi/2]");
  if (theta_max - theta_min > kTwoPi + slack) fail("longitude span exceeds 2pi");
}

UnitVector polar_to_cartesian(const PolarDirection& d) {
  const double c = std::cos(d.phi);
  return UnitVector::assume_unit({c * std::cos(d.theta), c * std::sin(d.theta), std::sin(d.phi)});
}

PolarDirection cartesian_to_polar(const UnitVector& v) {
  const double rho = std::hypot(v.x(), v.y());
  PolarDirection d;
  d.phi = std::atan2(v.z(), rho);
  if (rho == 0.0) return d;
  double theta = std::atan2(v.y(), v.x());
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0.0;
  d.theta = theta;
  return d;
}

double cap_area_fraction(double h) {
  if (!(h >= -1.0 && h <= 1.0)) throw std::invalid_argument("cap height must lie in [-1, 1]");
  return 0.5 * (1.0 - h);
}

double chord_distance(const UnitVector& u, const UnitVector& v) { return norm(u.vec() - v.vec()); }

UnitVector Frame::to_global(const PolarDirection& local) const {
  const double c = std::cos(local.phi);
  const Vec3 g = (c * std::cos(local.theta)) * e1 + (c * std::sin(local.theta)) * e2 + std::sin(local.phi) * e3;
  return UnitVector::normalize(g);
}

Frame frame_with_pole(const UnitVector& pole) {
  // Seed with the coordinate axis least aligned with the pole.
  const Vec3 p = pole.vec();
  const double ax = std::abs(p.x), ay = std::abs(p.y), az = std::abs(p.z);
  Vec3 seed{0.0, 0.0, 1.0};
  if (ax <= ay && ax <= az) {
    seed = {1.0, 0.0, 0.0};
  } else if (ay <= az) {
    seed = {0.0, 1.0, 0.0};
  }
  const Vec3 e1 = UnitVector::normalize(cross(seed, p)).vec();
  const Vec3 e2 = cross(p, e1);
  return {e1, e2, p};
}

double cover_cap_ring_latitude(double r) {
  const double ring = kCoverCapRing * r;
  return std::asin(std::clamp((2.0 - ring * ring) / 2.0, -1.0, 1.0));
}

std::array<UnitVector, 8> cover_cap_centers(const UnitVector& center, double r) {
  if (!(r > 0.0 && r <= std::sqrt(2.0) * (1.0 + 1e-15)))
    throw std::invalid_argument("cover cap radius must lie in (0, sqrt(2)]");
  const Frame frame = frame_with_pole(center);
  const double ring_phi = cover_cap_ring_latitude(r);
  std::array<UnitVector, 8> out;
  out[0] = center;
  for (int i = 0; i < kCoverCapSatellites; ++i) {
    out[i + 1] = frame.to_global({kTwoPi * i / kCoverCapSatellites, ring_phi});
  }
  return out;
}

}  // namespace capdisc
