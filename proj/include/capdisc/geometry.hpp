#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace capdisc {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Inputs whose norm differs from 1 by more than this are rejected.
inline constexpr double kUnitNormTolerance = 1e-6;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// A point (or cap axis) on S^2.
///
/// Construction from raw components rejects inputs that are not already unit
/// length to within kUnitNormTolerance, then divides by the norm. `normalize`
/// is the escape hatch for directions built internally (cross products,
/// midpoints) and accepts any nonzero vector.
class UnitVector {
 public:
  /// North pole.
  constexpr UnitVector() = default;

  /// Throws NonUnitPoint when | |v| - 1 | > kUnitNormTolerance.
  static UnitVector from_components(double x, double y, double z);
  /// Throws std::invalid_argument for zero or non-finite vectors.
  static UnitVector normalize(const Vec3& v);
  /// Keeps components bit-for-bit; they must already be unit to 1e-12.
  static UnitVector assume_unit(const Vec3& v);

  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }
  constexpr const Vec3& vec() const { return v_; }

  constexpr double dot(const UnitVector& o) const { return capdisc::dot(v_, o.v_); }
  constexpr double dot(const Vec3& o) const { return capdisc::dot(v_, o); }
  constexpr UnitVector operator-() const { return UnitVector(Vec3{-v_.x, -v_.y, -v_.z}); }

  friend constexpr bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  explicit constexpr UnitVector(const Vec3& v) : v_(v) {}

  Vec3 v_{0.0, 0.0, 1.0};
};

/// Longitude theta in [0, 2pi), latitude phi in [-pi/2, pi/2].
struct PolarDirection {
  double theta = 0.0;
  double phi = 0.0;
};

/// The closed cap {x : <x, axis> >= height}.
struct Cap {
  UnitVector axis;
  double height = 0.0;
};

/// Polar rectangle of directions, phi_min <= phi <= phi_max and
/// theta_min <= theta <= theta_max.
struct Region {
  double phi_min = 0.0;
  double phi_max = kHalfPi;
  double theta_min = 0.0;
  double theta_max = kTwoPi;

  /// Throws std::invalid_argument on inverted or out-of-range bounds.
  void validate() const;
};

UnitVector polar_to_cartesian(const PolarDirection& d);

/// Inverse of polar_to_cartesian; theta is 0 at the poles.
PolarDirection cartesian_to_polar(const UnitVector& v);

/// Normalized area of a cap of height h: (1 - h) / 2. Throws for h outside [-1, 1].
double cap_area_fraction(double h);

/// Euclidean (chord) distance in R^3.
double chord_distance(const UnitVector& u, const UnitVector& v);

/// Right-handed orthonormal frame whose third axis is `pole`.
struct Frame {
  Vec3 e1;
  Vec3 e2;
  Vec3 e3;

  /// Maps frame-local polar coordinates to a global unit vector.
  UnitVector to_global(const PolarDirection& local) const;
};

Frame frame_with_pole(const UnitVector& pole);

/// Satellites of the 8-cap cover sit at chord distance kCoverCapRing * r from the center.
inline constexpr double kCoverCapRing = 0.86;
inline constexpr int kCoverCapSatellites = 7;

/// Frame latitude of the satellite ring: asin((2 - (0.86 r)^2) / 2).
double cover_cap_ring_latitude(double r);

/// Centers of 8 caps of chord radius r/2 that together cover the cap of
/// chord radius r around `center`. The first element is `center`; the other
/// seven are equally spaced in frame longitude at chord distance 0.86 r.
/// Throws std::invalid_argument unless 0 < r <= sqrt(2).
std::array<UnitVector, 8> cover_cap_centers(const UnitVector& center, double r);

}  // namespace capdisc
