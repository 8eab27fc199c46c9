#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capdisc/geometry.hpp"

namespace capdisc {

enum class Generator { polar, twisted_polar, random, file };

std::string_view to_string(Generator g);
/// Accepts "polar", "twisted_polar" (or "twisted"), "random", "file".
std::optional<Generator> parse_generator(std::string_view name);

struct PointSetMeta {
  Generator generator = Generator::file;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
};

/// Ordered, non-empty collection of points on S^2.
class PointSet {
 public:
  /// Throws EmptyPointSet if `points` is empty.
  PointSet(std::vector<UnitVector> points, PointSetMeta meta);

  std::span<const UnitVector> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const PointSetMeta& meta() const { return meta_; }

  const UnitVector& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<UnitVector> points_;
  PointSetMeta meta_;
};

/// One latitude ring of a Polar Coordinates set.
struct OrbitLayout {
  int index = 0;       ///< j in 1..n-1
  double phi = 0.0;    ///< pi j / n - pi/2
  double z = 0.0;      ///< height of the ring, sin(phi); exactly mirrored about the equator
  double rho = 0.0;    ///< ring radius, cos(phi)
  int count = 0;       ///< floor(1/2 + sqrt(3) n cos(phi))
  double shift = 0.0;  ///< longitude of the first point
};

/// floor(1/2 + sqrt(3) n cos(phi_j)), evaluated so that mirror orbits agree
/// and exactly integral arguments are not rounded down.
int polar_orbit_count(int n, int j);

/// Ring layout of Polar Coordinates (twisted = false) or Twisted Polar
/// Coordinates. Orbits are listed from south to north. Throws for n < 2.
std::vector<OrbitLayout> polar_orbits(int n, bool twisted);

PointSet generate_polar(int n);
PointSet generate_twisted_polar(int n);

/// t i.i.d. uniform points from a seeded 64-bit Mersenne twister; output
/// depends only on (t, seed).
PointSet generate_random_uniform(std::size_t t, std::uint64_t seed);

/// CSV with header `x,y,z`, one point per row.
PointSet read_point_set(const std::filesystem::path& path);
PointSet parse_point_set(std::string_view text);
void write_point_set(const PointSet& ps, const std::filesystem::path& path);
std::string format_point_set(const PointSet& ps);

/// Shortest-ish lossless decimal: 17 significant digits.
std::string format_double(double v);

}  // namespace capdisc
