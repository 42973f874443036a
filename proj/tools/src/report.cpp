#include "ihsfuse/harness/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "ihsfuse/error.hpp"

namespace ihsfuse::harness {

namespace {

std::string metric_text(const MetricValue& v) {
  switch (v.kind()) {
    case MetricValue::Kind::Finite: return format_number(v.value());
    case MetricValue::Kind::Infinite: return "inf";
    case MetricValue::Kind::Undefined: return "undefined";
  }
  return "";
}

nlohmann::json metric_json(const MetricValue& v) {
  switch (v.kind()) {
    case MetricValue::Kind::Finite: return v.value();
    case MetricValue::Kind::Infinite: return "infinite";
    case MetricValue::Kind::Undefined: return "undefined";
  }
  return nullptr;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw UsageError("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_number(double v) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string metrics_to_csv(std::span<const MetricsReport> reports) {
  std::string out(kCsvHeader);
  out += '\n';
  if (!reports.empty()) {
    for (const auto& o : reports.front().origin) {
      out += "ORIGIN," + o.band + ',' + format_number(o.sd) + ',' + format_number(o.en) + ",,,,\n";
    }
  }
  for (const auto& r : reports) {
    for (const auto& b : r.bands) {
      out += r.method + ',' + b.band + ',' + format_number(b.sd) + ',' + format_number(b.en) + ',' +
             metric_text(b.snr) + ',' + format_number(b.nrmse) + ',' + format_number(b.di) + ',' +
             metric_text(b.cc) + '\n';
    }
  }
  return out;
}

nlohmann::json metrics_to_json(std::span<const MetricsReport> reports) {
  nlohmann::json doc;
  doc["columns"] = {"method", "band", "SD", "En", "SNR", "NRMSE", "DI", "CC"};
  auto origin = nlohmann::json::array();
  if (!reports.empty()) {
    for (const auto& o : reports.front().origin) origin.push_back({{"band", o.band}, {"SD", o.sd}, {"En", o.en}});
  }
  doc["origin"] = std::move(origin);
  auto methods = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json m;
    m["method"] = r.method;
    m["variant"] = r.variant;
    m["mode"] = r.mode;
    m["match"] = r.match;
    auto bands = nlohmann::json::array();
    for (const auto& b : r.bands) {
      bands.push_back({{"band", b.band},
                       {"SD", b.sd},
                       {"En", b.en},
                       {"SNR", metric_json(b.snr)},
                       {"NRMSE", b.nrmse},
                       {"DI", b.di},
                       {"CC", metric_json(b.cc)}});
    }
    m["bands"] = std::move(bands);
    methods.push_back(std::move(m));
  }
  doc["methods"] = std::move(methods);
  return doc;
}

std::string render_metrics(std::span<const MetricsReport> reports, ReportFormat format) {
  if (format == ReportFormat::Csv) return metrics_to_csv(reports);
  return metrics_to_json(reports).dump(2) + '\n';
}

std::string consistency_to_csv(std::span<const ConsistencyRow> rows) {
  std::string out = "variant,determinant,singular,paper_exact_deviation,corrected_deviation,recommended_mode\n";
  for (const auto& r : rows) {
    out += std::string(to_string(r.variant)) + ',' + format_number(r.forward_determinant) + ',' +
           (r.forward_singular ? "true" : "false") + ',' + format_number(r.paper_exact_deviation) + ',' +
           format_number(r.corrected_deviation) + ',' + std::string(to_string(r.recommended)) + '\n';
  }
  return out;
}

nlohmann::json consistency_to_json(std::span<const ConsistencyRow> rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"variant", to_string(r.variant)},
                   {"determinant", r.forward_determinant},
                   {"singular", r.forward_singular},
                   {"paper_exact_deviation", r.paper_exact_deviation},
                   {"corrected_deviation", r.corrected_deviation},
                   {"recommended_mode", to_string(r.recommended)}});
  }
  return arr;
}

}  // namespace ihsfuse::harness
