#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ihsfuse/fusion.hpp"
#include "ihsfuse/harness/report.hpp"
#include "ihsfuse/metrics.hpp"

namespace ihsfuse::harness {

/// Everything one `fuse` invocation needs.
struct FuseRequest {
  std::filesystem::path ms;
  std::filesystem::path pan;
  std::filesystem::path out;
  std::filesystem::path report;  ///< empty: no report
  ReportFormat format = ReportFormat::Csv;
  std::vector<Variant> variants{Variant::Ihs5};
  FusionConfig config;  ///< config.variant is overridden per entry of `variants`
  int levels = 0;       ///< entropy levels; <= 0 means 2^bit_depth
  int threads = 0;      ///< <= 0: resolve from IHSFUSE_THREADS
};

struct SynthRequest {
  std::uint64_t seed = 1;
  int width = 256;
  int height = 256;
  int factor = 4;
  std::filesystem::path out_dir = ".";
};

struct MetricsRequest {
  std::filesystem::path image_a;  ///< measured (fused)
  std::filesystem::path image_b;  ///< reference
  std::filesystem::path report;   ///< empty: stdout
  ReportFormat format = ReportFormat::Csv;
  int levels = 0;
};

/// Upper-case method label used in report rows ("IHS5", "HLS", ...).
std::string method_label(Variant v);

/// Worker count: IHSFUSE_THREADS when set to a positive integer, else the hardware concurrency.
int resolve_thread_count();

/// Output path for `variant` when several variants share one --out path:
/// "fused.ppm" becomes "fused_ihs5.ppm".
std::filesystem::path variant_output_path(const std::filesystem::path& out, Variant v, bool multiple);

/// Fuses, writes image(s) and the report; returns reports in registry order.
std::vector<MetricsReport> cmd_fuse(const FuseRequest& req);

/// Serialized variant consistency audit.
std::string cmd_variants(ReportFormat format);

/// Writes ground_truth.ppm, ms.ppm and pan.pgm into req.out_dir.
void cmd_synth(const SynthRequest& req);

/// Serialized report; also written to req.report when set.
std::string cmd_metrics(const MetricsRequest& req);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Entry point shared by the ihsfuse executable; returns the exit status.
int run_cli(int argc, char** argv);

}  // namespace ihsfuse::harness
