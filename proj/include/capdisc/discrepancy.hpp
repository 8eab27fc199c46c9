#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "capdisc/geometry.hpp"
#include "capdisc/point_sets.hpp"

namespace capdisc {

/// Sorted projections <p, v> of a point set onto one direction.
class ProjectionProfile {
 public:
  ProjectionProfile(UnitVector direction, std::vector<double> sorted_projections);

  const UnitVector& direction() const { return direction_; }
  std::span<const double> values() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  UnitVector direction_;
  std::vector<double> sorted_;
};

ProjectionProfile project(std::span<const UnitVector> points, const UnitVector& v);
ProjectionProfile project(const PointSet& ps, const UnitVector& v);

/// Directed discrepancy: the supremum over h of | #{s_i >= h}/t - (1-h)/2 |.
///
/// The supremum is reached at a projection value, either by the closed cap at
/// that height (witness_inclusive) or as the limit of caps just above it.
struct DirectedResult {
  UnitVector direction;
  double value = 0.0;
  double witness_height = 1.0;
  bool witness_inclusive = true;
};

DirectedResult directed_discrepancy(const ProjectionProfile& profile);

/// | count/t - (1-h)/2 |, arranged as |(2 count - t) + t h| / (2t) so that a
/// cap and its complement evaluate to bit-identical values.
double cap_deviation(std::size_t count, std::size_t t, double h);

/// Discrepancy of one cap. `inclusive` counts points on the boundary inside;
/// otherwise only points strictly above `height` count.
double cap_discrepancy(std::span<const UnitVector> points, const Cap& cap, bool inclusive);

/// A ball of directions around `center` in which the directed discrepancy is
/// at most `bound`.
struct ConfidenceBall {
  UnitVector center;
  double radius = 0.0;
  double bound = 0.0;
  std::int64_t k = 0;  ///< floor(t (bound - Dis_center)) + 1
};

/// Slack, in units of points, applied when flooring t (d - Dis_v).
inline constexpr double kCountSlack = 1e-9;

/// Thrown when Dis_v + 1/t > d: the direction itself witnesses a directed
/// discrepancy of at least d - 1/t.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(DirectedResult witness, double bound);
  const DirectedResult& witness() const { return witness_; }
  double bound() const { return bound_; }

 private:
  DirectedResult witness_;
  double bound_;
};

/// Confidence radius for bound d.
///
/// With K = floor(t (d - Dis_v)) points allowed to change sides, the radius is
/// min over i of s_{i+K} - s_i, so that no half-open slab of that width holds
/// more than K projections; 2 when K >= t.
ConfidenceBall confidence_radius(const ProjectionProfile& profile, const DirectedResult& directed, double d);
ConfidenceBall confidence_radius(const ProjectionProfile& profile, double d);

/// Largest r such that moving every projection by less than r keeps the
/// directed discrepancy at most d: each cap count is bounded by the counts of
/// the profile shifted by r either way. Never smaller than the windowed
/// confidence radius; 0 when Dis_v >= d.
double profile_radius(const ProjectionProfile& profile, double d);

/// How a direction's certified radius is obtained.
enum class RadiusRule {
  window,   ///< confidence_radius
  profile,  ///< max of confidence_radius and profile_radius
};

/// Directed value and confidence ball of one direction, the unit of work of
/// the covering engine.
struct DirectionEvaluation {
  DirectedResult directed;
  ConfidenceBall ball;
};

/// Throws HypothesisViolation when d < Dis_v + 1/t.
DirectionEvaluation evaluate_direction(std::span<const UnitVector> points, const UnitVector& v, double d,
                                       RadiusRule rule = RadiusRule::window);

struct NaiveOptions {
  std::size_t size_limit = 400;
  int threads = 1;
  /// Points within this distance of a candidate plane count as on it.
  double plane_tolerance = 1e-12;
};

struct NaiveResult {
  double value = 0.0;
  Cap witness;
  bool witness_inclusive = true;
  std::uint64_t candidates = 0;
};

/// Exact cap discrepancy by enumerating extremal caps: zero-area caps at each
/// point, the smallest cap through each pair, and both caps cut by the plane
/// through each triple, each with boundary points counted inside and outside.
/// O(t^4). Throws SizeLimitExceeded above options.size_limit.
NaiveResult naive_discrepancy(const PointSet& ps, const NaiveOptions& options = {});

}  // namespace capdisc
