#include "capdisc/polar_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "capdisc/discrepancy.hpp"

namespace capdisc {

double orbit_sum_closed_form(int n, int j) {
  const double a = kPi / (2.0 * n);
  return std::sqrt(3.0) * n * (std::cos(a) + std::cos((2.0 * j - 1.0) * a)) / (2.0 * std::sin(a));
}

OrbitSums orbit_sums(int n) {
  const auto orbits = polar_orbits(n, false);
  OrbitSums out;
  out.n = n;
  out.counts.assign(static_cast<std::size_t>(n + 1), 1);
  out.z.assign(static_cast<std::size_t>(n + 1), 0.0);
  out.z.front() = -1.0;
  out.z.back() = 1.0;
  for (const auto& o : orbits) {
    out.counts[static_cast<std::size_t>(o.index)] = o.count;
    out.z[static_cast<std::size_t>(o.index)] = o.z;
  }
  out.s.assign(static_cast<std::size_t>(n + 2), 0);
  for (int j = n; j >= 0; --j)
    out.s[static_cast<std::size_t>(j)] = out.s[static_cast<std::size_t>(j + 1)] + out.counts[static_cast<std::size_t>(j)];
  out.s.pop_back();
  out.t = out.s.front();
  for (int j = 1; j <= n; ++j) {
    const double f = static_cast<double>(out.s[static_cast<std::size_t>(j)]) - orbit_sum_closed_form(n, j);
    out.max_remainder = std::max(out.max_remainder, std::abs(f));
  }
  return out;
}

double north_pole_directed(int n) {
  const auto sums = orbit_sums(n);
  const auto t = static_cast<std::size_t>(sums.t);
  double value = 0.0;
  for (int j = 0; j <= n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const auto inclusive = static_cast<std::size_t>(sums.s[idx]);
    const auto exclusive = j == n ? std::size_t{0} : static_cast<std::size_t>(sums.s[idx + 1]);
    value = std::max({value, cap_deviation(inclusive, t, sums.z[idx]), cap_deviation(exclusive, t, sums.z[idx])});
  }
  return value;
}

double north_pole_local_radius(int n) {
  const auto orbits = polar_orbits(n, false);
  // Levels on or above the equator, bottom to top, ending at the pole.
  std::vector<std::pair<double, double>> levels;  // (z, rho)
  for (const auto& o : orbits)
    if (o.z >= 0.0) levels.emplace_back(o.z, o.rho);
  levels.emplace_back(1.0, 0.0);
  double best = 2.0;
  const UnitVector pole;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const auto [z1, rho1] = levels[i];
    const auto [z2, rho2] = levels[i + 1];
    const double rho = std::max(rho1, rho2);
    const auto normal = UnitVector::normalize({0.0, -(z2 - z1), 2.0 * rho});
    best = std::min(best, chord_distance(normal, pole));
  }
  return best;
}

double latitude_bound_from_radius(double radius) {
  return kHalfPi - 2.0 * std::asin(std::min(radius, 2.0) / 2.0);
}

NorthPoleCertificate north_pole_certificate(int n) {
  NorthPoleCertificate c;
  c.n = n;
  c.t = orbit_sums(n).t;
  c.north_value = north_pole_directed(n);
  c.local_radius = north_pole_local_radius(n);
  c.phi_max = latitude_bound_from_radius(c.local_radius);
  c.bound_constant_check = c.north_value * static_cast<double>(c.t) / n;
  return c;
}

ConjectureResult conjecture_check(int n, const ConjectureOptions& options) {
  if (n < 2) throw std::invalid_argument("conjecture check needs n >= 2");
  PointSet ps = [&] {
    switch (options.structure) {
      case Generator::polar: return generate_polar(n);
      case Generator::twisted_polar: return generate_twisted_polar(n);
      default: throw std::invalid_argument("conjecture check needs a polar or twisted structure");
    }
  }();
  ConjectureResult out;
  out.certificate = north_pole_certificate(n);
  out.t = static_cast<std::int64_t>(ps.size());
  out.d = options.d.value_or(out.certificate.north_value);
  out.region = Region{0.0, out.certificate.phi_max, 0.0, kPi};
  CoverParams params = options.base;
  params.d = out.d;
  params.region = out.region;
  out.outcome = cover_region(ps, params);
  return out;
}

}  // namespace capdisc
