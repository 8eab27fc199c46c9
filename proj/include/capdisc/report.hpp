#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "capdisc/covering.hpp"
#include "capdisc/discrepancy.hpp"
#include "capdisc/point_sets.hpp"

namespace capdisc {

inline constexpr int kReportSchemaVersion = 1;

std::string_view to_string(RadiusRule rule);
std::optional<RadiusRule> parse_radius_rule(std::string_view name);

nlohmann::json to_json(const PointSetMeta& meta, std::size_t t);
nlohmann::json to_json(const Region& region);
nlohmann::json to_json(const DirectedResult& r);
nlohmann::json to_json(const NaiveResult& r);

/// Full covering certificate. Timings are left out unless asked for, so two
/// runs with the same inputs serialize identically.
nlohmann::json cover_report(const PointSetMeta& meta, std::size_t t, const CoverParams& params,
                            const CoverOutcome& outcome, bool include_timings);

/// One line of the conjecture summary table.
struct RunSummaryRow {
  int n = 0;
  std::int64_t t = 0;
  std::int64_t n_dd = 0;
  std::int64_t n_cc = 0;
  double phase1_s = 0.0;
  double cover_cap_s = 0.0;
  double total_s = 0.0;
  double d = 0.0;
  CoverStatus status = CoverStatus::residual;
};

inline constexpr std::string_view kSummaryHeader = "n,t,n_DD,n_CC,phase1_s,cover_cap_s,total_s,d,status";

std::optional<CoverStatus> parse_cover_status(std::string_view name);

std::string format_summary_row(const RunSummaryRow& row);
/// Parses a summary table. Throws MalformedRow.
std::vector<RunSummaryRow> parse_summary(std::string_view text);
/// Missing file reads as an empty table.
std::vector<RunSummaryRow> read_summary(const std::filesystem::path& path);
/// Rows sorted by n.
void write_summary(const std::filesystem::path& path, std::vector<RunSummaryRow> rows);
/// Replaces the row with the same n, or adds it.
void upsert_summary_row(std::vector<RunSummaryRow>& rows, const RunSummaryRow& row);

/// Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace capdisc
