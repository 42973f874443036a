#pragma once

#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ihsfuse/colorspace.hpp"
#include "ihsfuse/metrics.hpp"

namespace ihsfuse::harness {

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view name);

/// Column order of the quantitative comparison table.
inline constexpr std::string_view kCsvHeader = "method,band,SD,En,SNR,NRMSE,DI,CC";

/// ORIGIN rows (from the first report) followed by each report's band rows.
/// SNR "inf" and CC "undefined" stand in for the non-numeric metric values.
std::string metrics_to_csv(std::span<const MetricsReport> reports);
nlohmann::json metrics_to_json(std::span<const MetricsReport> reports);
std::string render_metrics(std::span<const MetricsReport> reports, ReportFormat format);

std::string consistency_to_csv(std::span<const ConsistencyRow> rows);
nlohmann::json consistency_to_json(std::span<const ConsistencyRow> rows);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

}  // namespace ihsfuse::harness
