#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "capdisc/discrepancy.hpp"
#include "capdisc/point_sets.hpp"
#include "capdisc/polar_analysis.hpp"
#include "oracles.hpp"

using namespace capdisc;

TEST_CASE("orbit sums") {
  for (int n : {2, 3, 7, 15, 40, 125}) {
    CAPTURE(n);
    const auto sums = orbit_sums(n);
    CHECK(sums.s.front() == sums.t);
    CHECK(sums.s.back() == 1);
    CHECK(sums.t == static_cast<std::int64_t>(generate_polar(n).size()));
    CHECK(sums.max_remainder <= 2.0 * n);
    for (int j = 1; j < n; ++j) CHECK(sums.counts[static_cast<std::size_t>(j)] == oracle::polar_count_direct(n, j));
  }
}

TEST_CASE("closed form of the orbit sums") {
  // direct sum of sqrt(3) n sin(pi i / n) over the levels i >= j
  for (int n : {5, 20, 90}) {
    for (int j = 1; j <= n; ++j) {
      long double sum = 0;
      for (int i = j; i < n; ++i) sum += std::sqrt(3.0L) * n * std::sin(3.14159265358979323846L * i / n);
      CHECK(std::abs(orbit_sum_closed_form(n, j) - static_cast<double>(sum)) <= 1e-9 * std::max(1.0L, sum));
    }
  }
}

TEST_CASE("north pole value agrees with the generic evaluation") {
  for (int n = 2; n <= 50; ++n) {
    CAPTURE(n);
    const auto ps = generate_polar(n);
    const double generic = directed_discrepancy(project(ps, UnitVector{})).value;
    CHECK(std::abs(north_pole_directed(n) - generic) <= 1e-12);
    const auto tw = generate_twisted_polar(n);
    CHECK(std::abs(directed_discrepancy(project(tw, UnitVector{})).value - generic) <= 1e-12);
  }
}

TEST_CASE("north pole value is O(n/t)") {
  for (int n = 2; n <= 200; ++n) {
    const auto c = north_pole_certificate(n);
    CHECK(c.north_value <= (std::sqrt(3.0) / 2 + 4) * n / static_cast<double>(c.t));
    CHECK(c.bound_constant_check == doctest::Approx(c.north_value * static_cast<double>(c.t) / n));
  }
}

TEST_CASE("north pole local radius") {
  double prev = 3.0;
  for (int n = 2; n <= 60; ++n) {
    const double r = north_pole_local_radius(n);
    CHECK(r > 0.0);
    CHECK(r < prev);
    prev = r;
    const auto c = north_pole_certificate(n);
    CHECK(c.phi_max == doctest::Approx(kHalfPi - 2 * std::asin(r / 2)));
    CHECK(c.phi_max < kHalfPi);
  }
  CHECK(latitude_bound_from_radius(0.0) == kHalfPi);
  CHECK(latitude_bound_from_radius(2.0) == doctest::Approx(-kHalfPi));
}

TEST_CASE("directions near the pole keep the upper levels separated") {
  std::mt19937_64 rng(31);
  for (int n : {4, 9, 15, 30}) {
    CAPTURE(n);
    const double r = north_pole_local_radius(n);
    const auto ps = generate_polar(n);
    for (int trial = 0; trial < 300; ++trial) {
      const Vec3 u = oracle::sample_ball({0, 0, 1}, r * 0.999, rng);
      std::map<double, std::pair<double, double>> levels;  // z -> (min, max) projection
      for (const auto& p : ps.points()) {
        if (p.z() < -1e-12) continue;
        const double s = p.x() * u.x + p.y() * u.y + p.z() * u.z;
        auto [it, fresh] = levels.try_emplace(p.z(), s, s);
        if (!fresh) it->second = {std::min(it->second.first, s), std::max(it->second.second, s)};
      }
      double below_max = -2.0;
      for (const auto& [z, range] : levels) {
        CHECK(range.first > below_max);
        below_max = range.second;
      }
    }
  }
}

TEST_CASE("conjecture check at n = 15") {
  const auto res = conjecture_check(15);
  CHECK(res.outcome.status == CoverStatus::covered);
  CHECK(res.d == res.certificate.north_value);
  CHECK(res.region.theta_max == doctest::Approx(kPi));
  CHECK(res.region.phi_max == res.certificate.phi_max);
  CHECK(res.outcome.max_directed_value <= res.d);

  ConjectureOptions half;
  half.d = res.d / 2;
  CHECK(conjecture_check(15, half).outcome.status == CoverStatus::counterexample);

  ConjectureOptions bad;
  bad.structure = Generator::random;
  CHECK_THROWS_AS(conjecture_check(15, bad), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_check(1), std::invalid_argument);
}
