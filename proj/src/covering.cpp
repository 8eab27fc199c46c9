#include "capdisc/covering.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "capdisc/parallel.hpp"

namespace capdisc {

namespace {

constexpr double kMinRadius = 1e-12;
const double kSqrt2 = std::sqrt(2.0);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Angular (geodesic) radius of a chord-r ball.
double angular_radius(double r) { return 2.0 * std::asin(std::min(r, 2.0) / 2.0); }

CoverageRecord make_record(const UnitVector& center, const DirectionEvaluation& eval, RecordOrigin origin) {
  return {cartesian_to_polar(center), center, eval.ball.radius, eval.directed.value, origin};
}

struct Evaluator {
  std::span<const UnitVector> points;
  double d;
  RadiusRule rule;

  DirectionEvaluation operator()(const UnitVector& v) const { return evaluate_direction(points, v, d, rule); }
};

}  // namespace

void CoverParams::validate() const {
  if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("bound d must lie in [0, 1]");
  region.validate();
  if (orbit_sample_count < 1) throw std::invalid_argument("orbit_sample_count must be >= 1");
  if (!(r_min_factor > 0.0 && r_min_factor <= 1.0)) throw std::invalid_argument("r_min_factor must lie in (0, 1]");
  if (cover_cap_max_depth < 0) throw std::invalid_argument("cover_cap_max_depth must be >= 0");
  if (!(binary_search_tol > 0.0)) throw std::invalid_argument("binary_search_tol must be positive");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

std::string_view to_string(CoverStatus s) {
  switch (s) {
    case CoverStatus::covered: return "covered";
    case CoverStatus::counterexample: return "counterexample";
    case CoverStatus::residual: return "residual";
  }
  return "residual";
}

std::string_view to_string(RecordOrigin o) { return o == RecordOrigin::orbit ? "orbit" : "cover_cap"; }

std::optional<double> step_theta(double r, double phi) {
  const double c = std::cos(phi);
  if (!(c > 0.0) || r > 2.0 * c) return std::nullopt;
  return 2.0 * std::asin(std::min(r / (2.0 * c), 1.0));
}

namespace {

/// Both intersections of the two balls; they lie on the bisecting meridian
/// tau = d_theta / 2 and satisfy <v1, u> = 1 - r^2/2.
std::optional<std::pair<double, double>> orbit_intersections(double phi, double r) {
  const auto dtheta = step_theta(r, phi);
  if (!dtheta) return std::nullopt;
  const double tau = *dtheta / 2.0;
  const double a = std::cos(phi) * std::cos(tau);
  const double b = std::sin(phi);
  const double c = 1.0 - r * r / 2.0;
  const double len = std::hypot(a, b);
  if (len == 0.0 || std::abs(c) > len) return std::nullopt;
  const double delta = std::atan2(b, a);
  const double spread = std::acos(std::clamp(c / len, -1.0, 1.0));
  return std::pair{delta - spread, delta + spread};
}

}  // namespace

std::optional<double> orbit_intersection_latitude(double phi, double r) {
  auto both = orbit_intersections(phi, r);
  if (!both) return std::nullopt;
  return both->first;
}

std::optional<double> orbit_upper_intersection_latitude(double phi, double r) {
  auto both = orbit_intersections(phi, r);
  if (!both) return std::nullopt;
  return both->second;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double r_min_from_samples(std::vector<double> radii, double factor) {
  return factor * median(std::move(radii));
}

namespace {

struct OrbitSample {
  double r_min = 0.0;
  double max_directed = 0.0;
  std::int64_t evaluations = 0;
};

OrbitSample sample_orbit(const Evaluator& eval, double phi, const CoverParams& params) {
  const int count = params.orbit_sample_count;
  const double span = params.region.theta_max - params.region.theta_min;
  std::vector<std::optional<DirectionEvaluation>> results(static_cast<std::size_t>(count));
  std::vector<std::optional<HypothesisViolation>> violations(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), params.threads, [&](std::size_t k) {
    const double theta = params.region.theta_min + span * (static_cast<double>(k) + 0.5) / count;
    try {
      results[k] = eval(polar_to_cartesian({theta, phi}));
    } catch (const HypothesisViolation& e) {
      violations[k] = e;
    }
  });
  for (auto& v : violations)
    if (v) throw *v;
  OrbitSample out;
  std::vector<double> radii;
  for (const auto& r : results) {
    radii.push_back(r->ball.radius);
    out.max_directed = std::max(out.max_directed, r->directed.value);
  }
  // Cover Cap cannot certify more than sqrt(2) around a direction.
  out.r_min = std::min(r_min_from_samples(std::move(radii), params.r_min_factor), kSqrt2);
  out.evaluations = count;
  return out;
}

}  // namespace

double estimate_orbit_r_min(const PointSet& ps, double phi, const CoverParams& params) {
  return sample_orbit(Evaluator{ps.points(), params.d, params.radius_rule}, phi, params).r_min;
}

double ball_latitude_halfwidth(double r, double phi, double psi) {
  // |u - v|^2 < r^2  <=>  cos phi cos psi cos(dtheta) > 1 - r^2/2 - sin phi sin psi.
  const double num = 1.0 - r * r / 2.0 - std::sin(phi) * std::sin(psi);
  const double cc = std::cos(phi) * std::cos(psi);
  if (!(cc > 1e-300)) return num < 0.0 ? kPi : -1.0;
  const double e = num / cc;
  if (e < -1.0) return kPi;
  if (e >= 1.0) return -1.0;
  return std::acos(e);
}

bool latitude_arc_covered(std::span<const OrbitCenter> centers, double phi, double psi, double theta_min,
                          double theta_max) {
  double reach = theta_min;
  for (const auto& c : centers) {
    const double a = ball_latitude_halfwidth(c.radius, phi, psi);
    if (a >= kPi) return true;
    if (a < 0.0) continue;
    if (c.theta - a > reach) return false;
    reach = std::max(reach, c.theta + a);
  }
  return reach >= theta_max;
}

CoverCapResult cover_cap_recurse(const PointSet& ps, const UnitVector& v, double required_r, double d, int depth,
                                 RadiusRule rule) {
  if (!(required_r > 0.0 && required_r <= kSqrt2 * (1.0 + 1e-12)))
    throw std::invalid_argument("cover cap radius must lie in (0, sqrt(2)]");
  if (depth < 0) throw std::invalid_argument("cover cap depth must be >= 0");
  const double r = std::min(required_r, kSqrt2);
  const double half = r / 2.0;
  CoverCapResult out;
  for (const auto& c : cover_cap_centers(v, r)) {
    const auto eval = evaluate_direction(ps.points(), c, d, rule);
    ++out.evaluations;
    out.max_directed_value = std::max(out.max_directed_value, eval.directed.value);
    if (eval.ball.radius >= half) {
      out.records.push_back(make_record(c, eval, RecordOrigin::cover_cap));
    } else if (depth > 0) {
      auto sub = cover_cap_recurse(ps, c, half, d, depth - 1, rule);
      out.evaluations += sub.evaluations;
      out.max_directed_value = std::max(out.max_directed_value, sub.max_directed_value);
      out.records.insert(out.records.end(), sub.records.begin(), sub.records.end());
      out.residual.insert(out.residual.end(), sub.residual.begin(), sub.residual.end());
    } else {
      out.residual.push_back({cartesian_to_polar(c), c, half});
    }
  }
  out.covered = out.residual.empty();
  return out;
}

namespace {

struct QueuedDirection {
  UnitVector center;
  double required_radius = 0.0;
};

struct OrbitWalk {
  std::vector<OrbitCenter> centers;
  std::vector<CoverageRecord> records;
  std::vector<QueuedDirection> cannot_cover;
  double max_directed = 0.0;
  std::int64_t evaluations = 0;
};

/// Walks one latitude from theta_min, stepping by each center's effective
/// radius; the last center is pinned to theta_max.
OrbitWalk walk_orbit(const Evaluator& eval, double phi, double r_min, const Region& region) {
  OrbitWalk walk;
  double theta = region.theta_min;
  while (true) {
    const UnitVector v = polar_to_cartesian({theta, phi});
    const auto e = eval(v);
    ++walk.evaluations;
    walk.max_directed = std::max(walk.max_directed, e.directed.value);
    double effective = e.ball.radius;
    if (effective < r_min) {
      walk.cannot_cover.push_back({v, r_min});
      effective = r_min;
    } else {
      walk.records.push_back(make_record(v, e, RecordOrigin::orbit));
    }
    walk.centers.push_back({theta, effective});
    const auto step = step_theta(effective, phi);
    if (!step || theta >= region.theta_max) break;
    theta = std::min(theta + *step, region.theta_max);
  }
  return walk;
}

double grid_step(std::span<const OrbitCenter> centers) {
  double r = 2.0;
  for (const auto& c : centers) r = std::min(r, c.radius);
  return std::max(angular_radius(r) / 8.0, 1e-9);
}

/// Lowest latitude >= floor down to which the orbit's balls cover the
/// longitude span without a gap (checked on a grid, refined by bisection).
double lowest_covered_latitude(std::span<const OrbitCenter> centers, double phi, const Region& region,
                               double floor, double tol) {
  const double step = grid_step(centers);
  auto covered = [&](double psi) {
    return latitude_arc_covered(centers, phi, psi, region.theta_min, region.theta_max);
  };
  double good = phi;
  while (good > floor) {
    const double candidate = std::max(good - step, floor);
    if (covered(candidate)) {
      good = candidate;
      continue;
    }
    double bad = candidate;
    while (good - bad > tol) {
      const double mid = 0.5 * (good + bad);
      (covered(mid) ? good : bad) = mid;
    }
    return good;
  }
  return good;
}

bool covers_up_to(std::span<const OrbitCenter> centers, double phi, double target, const Region& region) {
  if (target <= phi) return true;
  const double step = grid_step(centers);
  for (double psi = phi;; psi = std::min(psi + step, target)) {
    if (!latitude_arc_covered(centers, phi, psi, region.theta_min, region.theta_max)) return false;
    if (psi >= target) return true;
  }
}

/// Lowest latitude at which two adjacent r-balls still meet at or above
/// `covered_low`.
double next_latitude(double covered_low, double r, double tol) {
  auto reaches = [&](double p) {
    const auto up = orbit_upper_intersection_latitude(p, r);
    return !up || *up >= covered_low;
  };
  double hi = covered_low;
  double lo = std::max(covered_low - angular_radius(r) - tol, -kHalfPi);
  if (reaches(lo)) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (hi + lo);
    (reaches(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

CoverOutcome cover_region(const PointSet& ps, const CoverParams& params) {
  params.validate();
  if (ps.size() < 2) throw std::invalid_argument("cover_region needs at least 2 points");
  const auto start = Clock::now();
  const Evaluator eval{ps.points(), params.d, params.radius_rule};
  const Region& region = params.region;
  const double tol = params.binary_search_tol;

  CoverOutcome out;
  std::vector<QueuedDirection> cannot_cover;
  bool sweep_complete = false;
  double r_min_global = std::numeric_limits<double>::infinity();

  try {
    double covered_low = region.phi_max;
    double phi = region.phi_max;
    std::optional<double> prev_r_min;
    bool retrying = false;
    for (std::int64_t guard = 0; guard < 10'000'000; ++guard) {
      phi = std::max(phi, region.phi_min);
      auto sample = sample_orbit(eval, phi, params);
      out.counters.n_samples += sample.evaluations;
      out.max_directed_value = std::max(out.max_directed_value, sample.max_directed);
      if (!retrying && prev_r_min && sample.r_min < *prev_r_min && phi < covered_low) {
        // The latitude was chosen with the previous orbit's r_min; redo it
        // with the smaller radius found here.
        phi = std::max(next_latitude(covered_low, sample.r_min, tol), region.phi_min);
        sample = sample_orbit(eval, phi, params);
        out.counters.n_samples += sample.evaluations;
        out.max_directed_value = std::max(out.max_directed_value, sample.max_directed);
      }
      const double r_min = sample.r_min;
      if (!(r_min > kMinRadius)) {
        const UnitVector v = polar_to_cartesian({region.theta_min, phi});
        out.not_covered.push_back({cartesian_to_polar(v), v, 0.0});
        break;
      }

      auto walk = walk_orbit(eval, phi, r_min, region);
      out.counters.n_dd += walk.evaluations;
      out.max_directed_value = std::max(out.max_directed_value, walk.max_directed);
      if (!covers_up_to(walk.centers, phi, covered_low, region)) {
        ++out.counters.n_orbit_retries;
        const double gap = covered_low - phi;
        phi = gap <= tol ? covered_low : phi + 0.5 * gap;
        retrying = true;
        continue;
      }

      const double low = lowest_covered_latitude(walk.centers, phi, region, region.phi_min, tol);
      ++out.counters.n_orbits;
      r_min_global = std::min(r_min_global, r_min);
      out.orbits.push_back({phi, r_min, low, walk.centers});
      out.records.insert(out.records.end(), walk.records.begin(), walk.records.end());
      cannot_cover.insert(cannot_cover.end(), walk.cannot_cover.begin(), walk.cannot_cover.end());
      if (low <= region.phi_min) {
        sweep_complete = true;
        break;
      }
      covered_low = low;
      prev_r_min = r_min;
      retrying = false;
      phi = next_latitude(covered_low, r_min, tol);
    }
  } catch (const HypothesisViolation& e) {
    out.counterexample = e.witness();
  }
  out.counters.n_cc = static_cast<std::int64_t>(cannot_cover.size());
  out.r_min_global = std::isfinite(r_min_global) ? r_min_global : 0.0;
  if (!out.orbits.empty()) {
    std::vector<double> per_orbit;
    for (const auto& o : out.orbits) per_orbit.push_back(o.r_min);
    out.r_min_median = median(std::move(per_orbit));
  }
  out.timings.phase1 = seconds_since(start);

  if (!out.counterexample) {
    const auto cc_start = Clock::now();
    const int depth = params.cover_cap_max_depth;
    std::vector<std::optional<CoverCapResult>> results(cannot_cover.size());
    std::vector<std::optional<HypothesisViolation>> violations(cannot_cover.size());
    parallel_for(cannot_cover.size(), params.threads, [&](std::size_t i) {
      try {
        results[i] = cover_cap_recurse(ps, cannot_cover[i].center, cannot_cover[i].required_radius, params.d, depth,
                                       params.cover_cap_radius_rule);
      } catch (const HypothesisViolation& e) {
        violations[i] = e;
      }
    });
    for (std::size_t i = 0; i < cannot_cover.size(); ++i) {
      if (violations[i]) {
        out.counterexample = violations[i]->witness();
        break;
      }
      const auto& r = *results[i];
      out.counters.n_cover_cap_evaluations += r.evaluations;
      out.max_directed_value = std::max(out.max_directed_value, r.max_directed_value);
      out.records.insert(out.records.end(), r.records.begin(), r.records.end());
      if (!r.covered) {
        const auto& q = cannot_cover[i];
        out.not_covered.push_back({cartesian_to_polar(q.center), q.center, q.required_radius});
        out.residual_balls.insert(out.residual_balls.end(), r.residual.begin(), r.residual.end());
      }
    }
    out.timings.cover_cap = seconds_since(cc_start);
  }

  if (out.counterexample) {
    out.status = CoverStatus::counterexample;
    out.max_directed_value = std::max(out.max_directed_value, out.counterexample->value);
  } else if (sweep_complete && out.not_covered.empty()) {
    out.status = CoverStatus::covered;
  } else {
    out.status = CoverStatus::residual;
  }
  out.timings.total = seconds_since(start);
  return out;
}

}  // namespace capdisc
