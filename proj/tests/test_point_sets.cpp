#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "capdisc/discrepancy.hpp"
#include "capdisc/errors.hpp"
#include "capdisc/point_sets.hpp"
#include "oracles.hpp"
#include "table_fixtures.hpp"

using namespace capdisc;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("capdisc_test_" + name);
}

bool mirror_closed(const PointSet& ps) {
  // every (x, y, z) has a partner (x, y, -z)
  std::vector<std::tuple<double, double, double>> pts;
  for (const auto& p : ps.points()) pts.emplace_back(p.x(), p.y(), p.z());
  std::sort(pts.begin(), pts.end());
  for (const auto& p : ps.points()) {
    const auto target = std::make_tuple(p.x() - 1e-9, p.y() - 1e-9, -p.z() - 1e-9);
    bool found = false;
    for (auto it = std::lower_bound(pts.begin(), pts.end(), target); it != pts.end(); ++it) {
      if (std::get<0>(*it) > p.x() + 1e-9) break;
      if (std::abs(std::get<1>(*it) - p.y()) <= 1e-9 && std::abs(std::get<2>(*it) + p.z()) <= 1e-9) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("polar sizes") {
  const auto p2 = generate_polar(2);
  CHECK(p2.size() == 5);
  const auto orbits = polar_orbits(2, false);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].count == 3);
  CHECK(orbits[0].z == 0.0);
  CHECK(generate_polar(15).size() == 250);
  CHECK(generate_polar(125).size() == 17234);
  CHECK_THROWS_AS(generate_polar(1), std::invalid_argument);
  CHECK_THROWS_AS(generate_twisted_polar(0), std::invalid_argument);
}

TEST_CASE("polar contains both poles and starts orbits at theta 0 or half a step") {
  const auto ps = generate_polar(9);
  CHECK(ps[0] == -UnitVector{});
  CHECK(ps[ps.size() - 1] == UnitVector{});
  for (const auto& o : polar_orbits(9, false)) {
    CHECK(o.phi == doctest::Approx(kPi * o.index / 9 - kHalfPi));
    CHECK(o.count >= 1);
    const int m = std::min(o.index, 9 - o.index);
    CHECK(o.shift == (m % 2 == 1 ? kPi / o.count : 0.0));
  }
}

TEST_CASE("orbit counts match the defining formula") {
  for (int n = 2; n <= 200; ++n)
    for (int j = 1; j < n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      CHECK(polar_orbit_count(n, j) == oracle::polar_count_direct(n, j));
    }
}

TEST_CASE("published table sizes") {
  std::map<int, int> exceptions(kTableCountExceptions.begin(), kTableCountExceptions.end());
  for (const auto& row : kTableRows) {
    CAPTURE(row.n);
    const auto t = static_cast<int>(generate_polar(row.n).size());
    if (exceptions.count(row.n)) {
      CHECK(t == exceptions[row.n]);
      CHECK(t == row.t + 1);
    } else {
      CHECK(t == row.t);
    }
  }
}

TEST_CASE("size against the closed form") {
  for (int n = 2; n <= 200; ++n) {
    const double t = static_cast<double>(generate_polar(n).size());
    const double a = kPi / (2.0 * n);
    CHECK(std::abs(t - std::sqrt(3.0) * n * std::cos(a) / std::sin(a)) <= 2.0 * n);
  }
}

TEST_CASE("twisted polar shares orbits but not longitudes") {
  const auto plain = polar_orbits(14, false);
  const auto twisted = polar_orbits(14, true);
  REQUIRE(plain.size() == twisted.size());
  int differing = 0;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    CHECK(plain[i].count == twisted[i].count);
    CHECK(plain[i].z == twisted[i].z);
    differing += plain[i].shift != twisted[i].shift ? 1 : 0;
  }
  CHECK(differing > 0);
  CHECK(generate_polar(14).size() == generate_twisted_polar(14).size());
}

TEST_CASE("twisted polar keeps the z multiset and the north pole value") {
  for (int n = 2; n <= 40; ++n) {
    CAPTURE(n);
    const auto a = generate_polar(n);
    const auto b = generate_twisted_polar(n);
    std::multiset<double> za, zb;
    for (const auto& p : a.points()) za.insert(p.z());
    for (const auto& p : b.points()) zb.insert(p.z());
    CHECK(za == zb);
    const UnitVector pole;
    CHECK(directed_discrepancy(project(a, pole)).value == directed_discrepancy(project(b, pole)).value);
  }
}

TEST_CASE("mirror symmetry in z") {
  for (int n = 2; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(mirror_closed(generate_polar(n)));
    CHECK(mirror_closed(generate_twisted_polar(n)));
  }
}

TEST_CASE("generated points are unit") {
  for (int n : {2, 3, 15, 60}) {
    const auto ps = generate_twisted_polar(n);
    for (const auto& p : ps.points()) CHECK(std::abs(norm(p.vec()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("random uniform generator") {
  const auto one = generate_random_uniform(1, 7);
  CHECK(one.size() == 1);
  CHECK(std::abs(norm(one[0].vec()) - 1.0) <= 1e-12);
  const auto a = generate_random_uniform(1000, 1);
  const auto b = generate_random_uniform(1000, 1);
  CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin(), b.points().end()));
  const auto c = generate_random_uniform(1000, 2);
  CHECK_FALSE(std::equal(a.points().begin(), a.points().end(), c.points().begin(), c.points().end()));
  const auto big = generate_random_uniform(10000, 3);
  double mean = 0.0;
  for (const auto& p : big.points()) mean += p.z();
  mean /= 10000.0;
  CHECK(std::abs(mean) < 0.02);
  CHECK(big.meta().generator == Generator::random);
  CHECK(*big.meta().seed == 3u);
  CHECK_THROWS(generate_random_uniform(0, 1));
}

TEST_CASE("point file round trip") {
  const auto path = temp_file("roundtrip.csv");
  const auto ps = generate_polar(15);
  write_point_set(ps, path);
  const auto back = read_point_set(path);
  CHECK(back.size() == ps.size());
  CHECK(std::equal(ps.points().begin(), ps.points().end(), back.points().begin(), back.points().end()));
  CHECK(back.meta().generator == Generator::file);
  std::filesystem::remove(path);
}

TEST_CASE("point file errors") {
  CHECK_THROWS_AS(parse_point_set("x,y,z\n0,0,2\n"), NonUnitPoint);
  CHECK_THROWS_AS(parse_point_set(""), EmptyPointSet);
  CHECK_THROWS_AS(parse_point_set("x,y,z\n"), EmptyPointSet);
  CHECK_THROWS_AS(parse_point_set("x,y,z\n0,0\n"), MalformedRow);
  CHECK_THROWS_AS(parse_point_set("x,y,z\n0,0,1,4\n"), MalformedRow);
  CHECK_THROWS_AS(parse_point_set("x,y,z\n0,zero,1\n"), MalformedRow);
  try {
    parse_point_set("x,y,z\n0,0,1\n\n1,1,1\n");
    FAIL("expected NonUnitPoint");
  } catch (const NonUnitPoint& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(read_point_set(temp_file("does_not_exist.csv")), IoError);
  const auto empty = temp_file("empty.csv");
  { std::ofstream(empty).flush(); }
  CHECK_THROWS_AS(read_point_set(empty), EmptyPointSet);
  std::filesystem::remove(empty);
}

TEST_CASE("headerless files and small normalization") {
  const auto ps = parse_point_set("0,0,1\n1.0000001,0,0\n");
  CHECK(ps.size() == 2);
  CHECK(std::abs(norm(ps[1].vec()) - 1.0) <= 1e-15);
}

TEST_CASE("format_double is lossless") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_double(v)) == v);
  }
}
