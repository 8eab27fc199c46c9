#include "capdisc/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "capdisc/errors.hpp"

namespace capdisc {

using nlohmann::json;

std::string_view to_string(RadiusRule rule) { return rule == RadiusRule::window ? "window" : "profile"; }

std::optional<RadiusRule> parse_radius_rule(std::string_view name) {
  if (name == "window") return RadiusRule::window;
  if (name == "profile") return RadiusRule::profile;
  return std::nullopt;
}

json to_json(const PointSetMeta& meta, std::size_t t) {
  json j;
  j["generator"] = std::string(to_string(meta.generator));
  j["n"] = meta.n ? json(*meta.n) : json(nullptr);
  j["seed"] = meta.seed ? json(*meta.seed) : json(nullptr);
  j["t"] = t;
  return j;
}

json to_json(const Region& r) {
  return {{"phi_min", r.phi_min}, {"phi_max", r.phi_max}, {"theta_min", r.theta_min}, {"theta_max", r.theta_max}};
}

json to_json(const DirectedResult& r) {
  const auto p = cartesian_to_polar(r.direction);
  return {{"theta", p.theta},
          {"phi", p.phi},
          {"direction", {r.direction.x(), r.direction.y(), r.direction.z()}},
          {"value", r.value},
          {"witness_height", r.witness_height},
          {"witness_inclusive", r.witness_inclusive}};
}

json to_json(const NaiveResult& r) {
  const auto& a = r.witness.axis;
  return {{"value", r.value},
          {"witness", {{"axis", {a.x(), a.y(), a.z()}}, {"height", r.witness.height}}},
          {"witness_inclusive", r.witness_inclusive},
          {"candidates", r.candidates}};
}

namespace {

json uncovered_json(const UncoveredBall& b) {
  return {{"theta", b.direction.theta}, {"phi", b.direction.phi}, {"required_radius", b.required_radius}};
}

}  // namespace

json cover_report(const PointSetMeta& meta, std::size_t t, const CoverParams& params, const CoverOutcome& outcome,
                  bool include_timings) {
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["points_meta"] = to_json(meta, t);
  report["params"] = {
      {"d", params.d},
      {"region", to_json(params.region)},
      {"defaults",
       {{"orbit_sample_count", params.orbit_sample_count},
        {"r_min_factor", params.r_min_factor},
        {"cover_cap_max_depth", params.cover_cap_max_depth},
        {"binary_search_tol", params.binary_search_tol},
        {"radius_rule", std::string(to_string(params.radius_rule))},
        {"cover_cap_radius_rule", std::string(to_string(params.cover_cap_radius_rule))}}}};

  const auto& c = outcome.counters;
  json out;
  out["status"] = std::string(to_string(outcome.status));
  out["counters"] = {{"n_DD", c.n_dd},
                     {"n_CC", c.n_cc},
                     {"n_samples", c.n_samples},
                     {"n_cover_cap_evaluations", c.n_cover_cap_evaluations},
                     {"n_orbits", c.n_orbits},
                     {"n_orbit_retries", c.n_orbit_retries}};
  out["max_directed_value"] = outcome.max_directed_value;
  out["r_min_global"] = outcome.r_min_global;
  out["r_min_median"] = outcome.r_min_median;
  if (include_timings) {
    out["timings"] = {{"phase1_s", outcome.timings.phase1},
                      {"cover_cap_s", outcome.timings.cover_cap},
                      {"total_s", outcome.timings.total}};
  }
  report["outcome"] = std::move(out);

  json records = json::array();
  for (const auto& r : outcome.records) {
    records.push_back({{"theta", r.direction.theta},
                       {"phi", r.direction.phi},
                       {"radius", r.radius},
                       {"directed_value", r.directed_value},
                       {"origin", std::string(to_string(r.origin))}});
  }
  report["records"] = std::move(records);

  json missing = json::array();
  for (const auto& b : outcome.not_covered) missing.push_back(uncovered_json(b));
  report["not_covered"] = std::move(missing);
  json residual = json::array();
  for (const auto& b : outcome.residual_balls) residual.push_back(uncovered_json(b));
  report["residual"] = std::move(residual);

  if (outcome.counterexample) report["counterexample"] = to_json(*outcome.counterexample);
  return report;
}

std::optional<CoverStatus> parse_cover_status(std::string_view name) {
  for (auto s : {CoverStatus::covered, CoverStatus::counterexample, CoverStatus::residual})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

std::string format_summary_row(const RunSummaryRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.t << ',' << row.n_dd << ',' << row.n_cc << ',' << format_double(row.phase1_s) << ','
     << format_double(row.cover_cap_s) << ',' << format_double(row.total_s) << ',' << format_double(row.d) << ','
     << to_string(row.status);
  return os.str();
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_field(std::string_view text, std::size_t line, const char* name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw MalformedRow(line, std::string("bad ") + name + " field '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<RunSummaryRow> parse_summary(std::string_view text) {
  std::vector<RunSummaryRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line == kSummaryHeader) continue;
    const auto f = split_commas(line);
    if (f.size() != 9) throw MalformedRow(line_no, "expected 9 fields");
    RunSummaryRow r;
    r.n = parse_field<int>(f[0], line_no, "n");
    r.t = parse_field<std::int64_t>(f[1], line_no, "t");
    r.n_dd = parse_field<std::int64_t>(f[2], line_no, "n_DD");
    r.n_cc = parse_field<std::int64_t>(f[3], line_no, "n_CC");
    r.phase1_s = parse_field<double>(f[4], line_no, "phase1_s");
    r.cover_cap_s = parse_field<double>(f[5], line_no, "cover_cap_s");
    r.total_s = parse_field<double>(f[6], line_no, "total_s");
    r.d = parse_field<double>(f[7], line_no, "d");
    const auto status = parse_cover_status(f[8]);
    if (!status) throw MalformedRow(line_no, "unknown status '" + std::string(f[8]) + "'");
    r.status = *status;
    rows.push_back(r);
  }
  return rows;
}

std::vector<RunSummaryRow> read_summary(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return {};
  return parse_summary(read_text_file(path));
}

void upsert_summary_row(std::vector<RunSummaryRow>& rows, const RunSummaryRow& row) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const RunSummaryRow& r) { return r.n == row.n; });
  if (it != rows.end()) {
    *it = row;
  } else {
    rows.push_back(row);
  }
}

void write_summary(const std::filesystem::path& path, std::vector<RunSummaryRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  std::string text(kSummaryHeader);
  text += '\n';
  for (const auto& r : rows) text += format_summary_row(r) + '\n';
  write_text_file(path, text);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace capdisc
