#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capdisc/covering.hpp"
#include "capdisc/point_sets.hpp"

namespace capdisc {

/// Points on or above each level of Polar Coordinates. Level 0 is the south
/// pole, levels 1..n-1 the orbits, level n the north pole.
struct OrbitSums {
  int n = 0;
  std::vector<std::int64_t> counts;  ///< n_j per level, n_0 = n_n = 1
  std::vector<std::int64_t> s;       ///< S_j = sum_{i >= j} n_i
  std::vector<double> z;             ///< level heights, -cos(pi j / n)
  std::int64_t t = 0;
  /// max_j |S_j - closed form|, the |f(j)| term
  double max_remainder = 0.0;
};

/// Closed form of S_j: sqrt(3) n (cos(pi/2n) + cos((2j-1) pi/2n)) / (2 sin(pi/2n)),
/// for 1 <= j <= n.
double orbit_sum_closed_form(int n, int j);

OrbitSums orbit_sums(int n);

/// Directed discrepancy of polar(n) at (0,0,1) from the orbit sums alone.
double north_pole_directed(int n);

/// Chord radius around the north pole inside which every cap boundary meets
/// at most one orbit.
double north_pole_local_radius(int n);

/// Latitude bound above which directions lie within `radius` of the pole.
double latitude_bound_from_radius(double radius);

struct NorthPoleCertificate {
  int n = 0;
  std::int64_t t = 0;
  double north_value = 0.0;
  double local_radius = 0.0;
  double phi_max = 0.0;
  /// north_value * t / n; stays below sqrt(3)/2 + 4.
  double bound_constant_check = 0.0;
};

NorthPoleCertificate north_pole_certificate(int n);

struct ConjectureOptions {
  Generator structure = Generator::twisted_polar;
  std::optional<double> d;  ///< overrides the north value
  CoverParams base;         ///< d and region are replaced
};

struct ConjectureResult {
  NorthPoleCertificate certificate;
  double d = 0.0;
  std::int64_t t = 0;
  Region region;
  CoverOutcome outcome;
};

/// Covers 0 <= phi <= phi_max, 0 <= theta <= pi with d = the north value.
/// Mirror and antipodal symmetry reduce the sphere to this region.
ConjectureResult conjecture_check(int n, const ConjectureOptions& options = {});

}  // namespace capdisc
