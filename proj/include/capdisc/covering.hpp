#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "capdisc/discrepancy.hpp"
#include "capdisc/geometry.hpp"
#include "capdisc/point_sets.hpp"

namespace capdisc {

struct CoverParams {
  double d = 0.0;  ///< bound to certify
  Region region;
  int orbit_sample_count = 20;
  double r_min_factor = 0.5;
  int cover_cap_max_depth = 3;
  double binary_search_tol = 1e-9;
  int threads = 1;
  RadiusRule radius_rule = RadiusRule::window;             ///< latitude sweep
  RadiusRule cover_cap_radius_rule = RadiusRule::profile;  ///< Cover Cap fallback

  /// Throws std::invalid_argument.
  void validate() const;
};

enum class CoverStatus { covered, counterexample, residual };
enum class RecordOrigin { orbit, cover_cap };

std::string_view to_string(CoverStatus s);
std::string_view to_string(RecordOrigin o);

/// One certified ball: every direction within `radius` (chord) of `center`
/// has directed discrepancy at most d.
struct CoverageRecord {
  PolarDirection direction;
  UnitVector center;
  double radius = 0.0;
  double directed_value = 0.0;
  RecordOrigin origin = RecordOrigin::orbit;
};

struct UncoveredBall {
  PolarDirection direction;
  UnitVector center;
  double required_radius = 0.0;
};

struct CoverCounters {
  std::int64_t n_dd = 0;                     ///< directions placed by the latitude sweep
  std::int64_t n_cc = 0;                     ///< of those, directions handed to Cover Cap
  std::int64_t n_samples = 0;                ///< r_min sample evaluations
  std::int64_t n_cover_cap_evaluations = 0;  ///< evaluations inside Cover Cap
  std::int64_t n_orbits = 0;
  std::int64_t n_orbit_retries = 0;  ///< orbits re-placed because their band missed the one above
};

struct CoverTimings {
  double phase1 = 0.0;
  double cover_cap = 0.0;
  double total = 0.0;
};



/// Longitude step that puts the next center on the boundary of the current
/// ball: 2 asin(r / (2 cos phi)). nullopt when r > 2 cos phi, in which case
/// the ball contains the whole circle of latitude.
std::optional<double> step_theta(double r, double phi);

/// Latitude of the lower intersection of two radius-r balls centered at
/// latitude phi and chord r apart. nullopt when the configuration does not
/// exist (the ball spans the orbit).
std::optional<double> orbit_intersection_latitude(double phi, double r);
/// Same, upper intersection. Values above pi/2 mean the intersection lies
/// past the pole.
std::optional<double> orbit_upper_intersection_latitude(double phi, double r);

/// Median with the even-count convention (mean of the middle two).
double median(std::vector<double> values);

/// factor * median(radii).
double r_min_from_samples(std::vector<double> radii, double factor);

/// r_min at latitude phi from params.orbit_sample_count directions evenly
/// spaced over the region's longitude span, capped at sqrt(2). Throws
/// HypothesisViolation.
double estimate_orbit_r_min(const PointSet& ps, double phi, const CoverParams& params);

/// Sweep center with its effective (certified) radius.
struct OrbitCenter {
  double theta = 0.0;
  double radius = 0.0;
};

/// Half-width in longitude of the part of the ball B((theta, phi), r) on the
/// circle of latitude psi: pi if the ball contains the circle, negative if it
/// misses it.
double ball_latitude_halfwidth(double r, double phi, double psi);

/// Whether the balls of one orbit (centers sorted by theta, at latitude phi)
/// cover the arc theta_min..theta_max of latitude psi.
bool latitude_arc_covered(std::span<const OrbitCenter> centers, double phi, double psi, double theta_min,
                          double theta_max);

struct OrbitSummary {
  double phi = 0.0;
  double r_min = 0.0;
  double covered_low = 0.0;           ///< lowest latitude certified by this orbit's balls
  std::vector<OrbitCenter> centers;  ///< theta order; queued directions carry r_min
};

struct CoverOutcome {
  CoverStatus status = CoverStatus::residual;
  std::vector<CoverageRecord> records;
  std::optional<DirectedResult> counterexample;
  /// Sweep directions whose r_min ball Cover Cap could not certify.
  std::vector<UncoveredBall> not_covered;
  /// The sub-balls left open when Cover Cap ran out of depth.
  std::vector<UncoveredBall> residual_balls;
  CoverCounters counters;
  CoverTimings timings;
  std::vector<OrbitSummary> orbits;
  double max_directed_value = 0.0;  ///< largest directed value evaluated anywhere
  double r_min_global = 0.0;        ///< smallest per-orbit r_min
  double r_min_median = 0.0;        ///< median of the per-orbit r_min
};

struct CoverCapResult {
  bool covered = false;
  std::vector<CoverageRecord> records;
  std::vector<UncoveredBall> residual;
  double max_directed_value = 0.0;
  std::int64_t evaluations = 0;
};

/// Certifies B(v, required_r) with the 8 half-radius balls of
/// cover_cap_centers, recursing into centers whose own confidence radius is
/// too small while depth remains. Throws HypothesisViolation.
CoverCapResult cover_cap_recurse(const PointSet& ps, const UnitVector& v, double required_r, double d, int depth,
                                 RadiusRule rule = RadiusRule::window);

/// Covers params.region with confidence balls certifying params.d.
CoverOutcome cover_region(const PointSet& ps, const CoverParams& params);

}  // namespace capdisc
