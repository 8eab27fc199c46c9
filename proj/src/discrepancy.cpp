#include "capdisc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "capdisc/errors.hpp"
#include "capdisc/parallel.hpp"

namespace capdisc {

ProjectionProfile::ProjectionProfile(UnitVector direction, std::vector<double> sorted_projections)
    : direction_(direction), sorted_(std::move(sorted_projections)) {}

ProjectionProfile project(std::span<const UnitVector> points, const UnitVector& v) {
  std::vector<double> s;
  s.reserve(points.size());
  for (const auto& p : points) s.push_back(std::clamp(p.dot(v), -1.0, 1.0));
  std::sort(s.begin(), s.end());
  return ProjectionProfile(v, std::move(s));
}

ProjectionProfile project(const PointSet& ps, const UnitVector& v) { return project(ps.points(), v); }

double cap_deviation(std::size_t count, std::size_t t, double h) {
  const double td = static_cast<double>(t);
  const double excess = (2.0 * static_cast<double>(count) - td) + td * h;
  return std::abs(excess) / (2.0 * td);
}

DirectedResult directed_discrepancy(const ProjectionProfile& profile) {
  const auto s = profile.values();
  const std::size_t t = s.size();
  DirectedResult best{profile.direction(), -1.0, 1.0, true};
  std::size_t i = 0;
  while (i < t) {
    std::size_t j = i;
    while (j < t && s[j] == s[i]) ++j;
    // Caps at height s[i]: inclusive holds t - i points, exclusive t - j.
    const double inc = cap_deviation(t - i, t, s[i]);
    const double exc = cap_deviation(t - j, t, s[i]);
    if (inc > best.value) best = {profile.direction(), inc, s[i], true};
    if (exc > best.value) best = {profile.direction(), exc, s[i], false};
    i = j;
  }
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

double cap_discrepancy(std::span<const UnitVector> points, const Cap& cap, bool inclusive) {
  std::size_t count = 0;
  for (const auto& p : points) {
    const double s = std::clamp(p.dot(cap.axis), -1.0, 1.0);
    if (inclusive ? s >= cap.height : s > cap.height) ++count;
  }
  return cap_deviation(count, points.size(), cap.height);
}

HypothesisViolation::HypothesisViolation(DirectedResult witness, double bound)
    : std::runtime_error("directed discrepancy " + std::to_string(witness.value) +
                         " is not at least 1/t below the bound " + std::to_string(bound)),
      witness_(witness),
      bound_(bound) {}

ConfidenceBall confidence_radius(const ProjectionProfile& profile, const DirectedResult& directed, double d) {
  const auto s = profile.values();
  const std::size_t t = s.size();
  const double margin = static_cast<double>(t) * (d - directed.value);
  if (!(margin + kCountSlack >= 1.0)) throw HypothesisViolation(directed, d);
  const double allowed_d = std::floor(margin + kCountSlack);
  ConfidenceBall ball{profile.direction(), 2.0, d, 0};
  if (allowed_d >= static_cast<double>(t)) {
    ball.k = static_cast<std::int64_t>(t) + 1;
    return ball;
  }
  const auto allowed = static_cast<std::size_t>(allowed_d);
  ball.k = static_cast<std::int64_t>(allowed) + 1;
  double r = 2.0;
  for (std::size_t i = 0; i + allowed < t; ++i) r = std::min(r, s[i + allowed] - s[i]);
  ball.radius = r;
  return ball;
}

ConfidenceBall confidence_radius(const ProjectionProfile& profile, double d) {
  return confidence_radius(profile, directed_discrepancy(profile), d);
}

double profile_radius(const ProjectionProfile& profile, double d) {
  const auto s = profile.values();
  const std::size_t t = s.size();
  const double td = static_cast<double>(t);
  double r = 2.0;
  // For |u - v| < r: #{<p,u> >= h} <= #{s > h - r} and >= #{s >= h + r}.
  // Each count is constant between projection values, so the worst h sits at
  // a gap edge. Constraints only bind while the clamp h in [-1, 1] is slack.
  auto upper = [&](std::size_t count, double next) {
    const double frac = static_cast<double>(count) / td;
    if (frac > d) r = std::min(r, 2.0 * (d - frac) + 1.0 - next);
  };
  auto lower = [&](std::size_t count, double prev) {
    const double frac = static_cast<double>(count) / td;
    if (1.0 - frac > d) r = std::min(r, 2.0 * (d + frac) - 1.0 + prev);
  };
  upper(t, s[0]);
  std::size_t i = 0;
  while (i < t) {
    std::size_t j = i;
    while (j < t && s[j] == s[i]) ++j;
    if (j < t) upper(t - j, s[j]);
    lower(t - j, s[i]);
    i = j;
  }
  return std::max(r, 0.0);
}

DirectionEvaluation evaluate_direction(std::span<const UnitVector> points, const UnitVector& v, double d,
                                       RadiusRule rule) {
  const auto profile = project(points, v);
  DirectionEvaluation out;
  out.directed = directed_discrepancy(profile);
  out.ball = confidence_radius(profile, out.directed, d);
  if (rule == RadiusRule::profile) out.ball.radius = std::max(out.ball.radius, profile_radius(profile, d));
  return out;
}

namespace {

struct PackedPoints {
  std::vector<double> x, y, z;
  explicit PackedPoints(std::span<const UnitVector> pts) {
    x.reserve(pts.size());
    y.reserve(pts.size());
    z.reserve(pts.size());
    for (const auto& p : pts) {
      x.push_back(p.x());
      y.push_back(p.y());
      z.push_back(p.z());
    }
  }
  std::size_t size() const { return x.size(); }
};

struct Candidate {
  double value = -1.0;
  Vec3 axis{0.0, 0.0, 1.0};
  double height = 1.0;
  bool inclusive = true;
};

/// Scores the plane <x, a> = h for both orientations and both boundary
/// conventions; keeps the first strict improvement.
void score_plane(const PackedPoints& pts, const Vec3& a, double h, double tol, Candidate& best) {
  std::size_t above = 0, on = 0;
  const std::size_t t = pts.size();
  for (std::size_t i = 0; i < t; ++i) {
    const double s = a.x * pts.x[i] + a.y * pts.y[i] + a.z * pts.z[i];
    if (s > h + tol) {
      ++above;
    } else if (s >= h - tol) {
      ++on;
    }
  }
  const std::size_t below = t - above - on;
  const double hc = std::clamp(h, -1.0, 1.0);
  const Vec3 neg{-a.x, -a.y, -a.z};
  const struct {
    std::size_t count;
    double height;
    const Vec3* axis;
    bool inclusive;
  } variants[4] = {{above + on, hc, &a, true}, {above, hc, &a, false}, {below + on, -hc, &neg, true}, {below, -hc, &neg, false}};
  for (const auto& v : variants) {
    const double dev = cap_deviation(v.count, t, v.height);
    if (dev > best.value) best = {dev, *v.axis, v.height, v.inclusive};
  }
}

}  // namespace

NaiveResult naive_discrepancy(const PointSet& ps, const NaiveOptions& options) {
  const std::size_t t = ps.size();
  if (t > options.size_limit) throw SizeLimitExceeded(t, options.size_limit);
  const PackedPoints pts(ps.points());
  const double tol = options.plane_tolerance;
  Candidate best;
  std::uint64_t candidates = 0;

  // Zero-area caps at each point.
  for (std::size_t i = 0; i < t; ++i) {
    score_plane(pts, ps[i].vec(), 1.0, tol, best);
    ++candidates;
  }
  // Smallest cap with two given points on its boundary.
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const Vec3 mid = ps[i].vec() + ps[j].vec();
      const double len = norm(mid);
      if (len < 1e-12) continue;
      const Vec3 axis = (1.0 / len) * mid;
      score_plane(pts, axis, dot(axis, ps[i].vec()), tol, best);
      ++candidates;
    }
  }
  // Plane through each triple; the first index is split across workers and
  // merged in index order so the witness is independent of the thread count.
  std::vector<Candidate> per_first(t);
  std::vector<std::uint64_t> per_first_count(t, 0);
  parallel_for(t, options.threads, [&](std::size_t i) {
    Candidate local;
    std::uint64_t local_count = 0;
    const Vec3 p = ps[i].vec();
    for (std::size_t j = i + 1; j < t; ++j) {
      const Vec3 pq = ps[j].vec() - p;
      for (std::size_t k = j + 1; k < t; ++k) {
        const Vec3 n = cross(pq, ps[k].vec() - p);
        const double len = norm(n);
        if (len < 1e-12) continue;
        const Vec3 axis = (1.0 / len) * n;
        score_plane(pts, axis, dot(axis, p), tol, local);
        ++local_count;
      }
    }
    per_first[i] = local;
    per_first_count[i] = local_count;
  });
  for (std::size_t i = 0; i < t; ++i) {
    if (per_first[i].value > best.value) best = per_first[i];
    candidates += per_first_count[i];
  }

  NaiveResult out;
  out.value = std::max(best.value, 0.0);
  out.witness = Cap{UnitVector::normalize(best.axis), best.height};
  out.witness_inclusive = best.inclusive;
  out.candidates = candidates;
  return out;
}

}  // namespace capdisc
