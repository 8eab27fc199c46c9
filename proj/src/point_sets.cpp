#include "capdisc/point_sets.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "capdisc/errors.hpp"

namespace capdisc {

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::polar: return "polar";
    case Generator::twisted_polar: return "twisted_polar";
    case Generator::random: return "random";
    case Generator::file: return "file";
  }
  return "file";
}

std::optional<Generator> parse_generator(std::string_view name) {
  if (name == "polar") return Generator::polar;
  if (name == "twisted_polar" || name == "twisted") return Generator::twisted_polar;
  if (name == "random") return Generator::random;
  if (name == "file") return Generator::file;
  return std::nullopt;
}

PointSet::PointSet(std::vector<UnitVector> points, PointSetMeta meta)
    : points_(std::move(points)), meta_(meta) {
  if (points_.empty()) throw EmptyPointSet();
}

int polar_orbit_count(int n, int j) {
  const int m = std::min(j, n - j);
  const double x = 0.5 + std::sqrt(3.0) * n * std::sin(kPi * m / n);
  return static_cast<int>(std::floor(x + 1e-9));
}

std::vector<OrbitLayout> polar_orbits(int n, bool twisted) {
  if (n < 2) throw std::invalid_argument("polar coordinates need n >= 2");
  std::vector<OrbitLayout> orbits;
  orbits.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) {
    const int m = std::min(j, n - j);
    OrbitLayout o;
    o.index = j;
    o.phi = kPi * j / n - kHalfPi;
    o.rho = std::sin(kPi * m / n);
    if (2 * j == n) {
      o.z = 0.0;
    } else {
      const double h = std::cos(kPi * m / n);
      o.z = 2 * j < n ? -h : h;
    }
    o.count = polar_orbit_count(n, j);
    // Alternate rings are offset by half a step, counted outward from the
    // equator on both sides so that the set stays mirror symmetric.
    o.shift = (m % 2 == 1) ? kPi / o.count : 0.0;
    if (twisted && 2 * j != n) {
      const int upper = n - m;
      o.shift += (static_cast<double>(upper) / n) * (kTwoPi / o.count);
    }
    orbits.push_back(o);
  }
  return orbits;
}

namespace {

PointSet build_polar(int n, bool twisted) {
  const auto orbits = polar_orbits(n, twisted);
  std::vector<UnitVector> pts;
  pts.push_back(-UnitVector{});
  for (const auto& o : orbits) {
    for (int k = 0; k < o.count; ++k) {
      const double theta = o.shift + kTwoPi * k / o.count;
      pts.push_back(UnitVector::assume_unit({o.rho * std::cos(theta), o.rho * std::sin(theta), o.z}));
    }
  }
  pts.push_back(UnitVector{});
  return PointSet(std::move(pts), {twisted ? Generator::twisted_polar : Generator::polar, n, std::nullopt});
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PointSet generate_polar(int n) { return build_polar(n, false); }
PointSet generate_twisted_polar(int n) { return build_polar(n, true); }

PointSet generate_random_uniform(std::size_t t, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("random point set needs t >= 1");
  std::mt19937_64 rng(seed);
  std::vector<UnitVector> pts;
  pts.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    // Archimedes: z uniform on [-1, 1] gives the uniform area measure.
    const double z = 2.0 * unit_interval(rng) - 1.0;
    const double theta = kTwoPi * unit_interval(rng);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    pts.push_back(UnitVector::normalize({rho * std::cos(theta), rho * std::sin(theta), z}));
  }
  return PointSet(std::move(pts), {Generator::random, static_cast<int>(t), seed});
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw MalformedRow(line, "cannot parse number '" + std::string(field) + "'");
  return v;
}

}  // namespace

PointSet parse_point_set(std::string_view text) {
  std::vector<UnitVector> pts;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line == "x,y,z") continue;
    }
    double xyz[3];
    std::size_t field = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      if (field == 3) throw MalformedRow(line_no, "expected 3 fields");
      xyz[field++] = parse_field(line.substr(start, comma == std::string_view::npos ? comma : comma - start), line_no);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (field != 3) throw MalformedRow(line_no, "expected 3 fields");
    try {
      pts.push_back(UnitVector::from_components(xyz[0], xyz[1], xyz[2]));
    } catch (const NonUnitPoint& e) {
      throw NonUnitPoint(e.norm(), line_no);
    }
  }
  if (pts.empty()) throw EmptyPointSet();
  return PointSet(std::move(pts), {Generator::file, std::nullopt, std::nullopt});
}

PointSet read_point_set(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open point file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str());
}

std::string format_point_set(const PointSet& ps) {
  std::string out = "x,y,z\n";
  for (const auto& p : ps.points()) {
    out += format_double(p.x());
    out += ',';
    out += format_double(p.y());
    out += ',';
    out += format_double(p.z());
    out += '\n';
  }
  return out;
}

void write_point_set(const PointSet& ps, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write point file " + path.string());
  out << format_point_set(ps);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace capdisc
