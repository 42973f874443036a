#include "ihsfuse/harness/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "ihsfuse/error.hpp"
#include "ihsfuse/harness/synth.hpp"
#include "ihsfuse/netpbm.hpp"
#include "ihsfuse/preprocess.hpp"

namespace ihsfuse::harness {

namespace {

Raster upsampled_reference(const Raster& ms, int width, int height) {
  const auto planes = upsample_ms(ms, width, height);
  const std::array<FloatPlane, 3> bands{planes.red, planes.green, planes.blue};
  return to_raster(bands, ms.bit_depth());
}

std::vector<Variant> parse_variant_list(const std::string& text) {
  if (text == "all") return {all_variants().begin(), all_variants().end()};
  std::vector<Variant> picked;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) picked.push_back(parse_variant(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (picked.empty()) throw UsageError("no variant given");
  // Registry order, duplicates dropped.
  std::vector<Variant> ordered;
  for (const auto v : all_variants()) {
    if (std::find(picked.begin(), picked.end(), v) != picked.end()) ordered.push_back(v);
  }
  return ordered;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string method_label(Variant v) {
  std::string s(to_string(v));
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

int resolve_thread_count() {
  if (const char* env = std::getenv("IHSFUSE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(std::min<long>(n, 1024));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::filesystem::path variant_output_path(const std::filesystem::path& out, Variant v, bool multiple) {
  if (!multiple) return out;
  auto p = out;
  p.replace_filename(out.stem().string() + "_" + std::string(to_string(v)) + out.extension().string());
  return p;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::vector<MetricsReport> cmd_fuse(const FuseRequest& req) {
  if (req.variants.empty()) throw UsageError("no variant given");
  const Raster ms = read_netpbm(req.ms);
  const Raster pan = read_netpbm(req.pan);
  if (ms.bands() != 3) throw UsageError("MS image must have 3 bands: " + req.ms.string());
  if (pan.bands() != 1) throw UsageError("PAN image must have 1 band: " + req.pan.string());
  const Raster reference = upsampled_reference(ms, pan.width(), pan.height());
  const bool multiple = req.variants.size() > 1;

  std::vector<std::optional<Raster>> fused(req.variants.size());
  std::vector<std::exception_ptr> failures(req.variants.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < req.variants.size(); i = next++) {
      try {
        FusionConfig cfg = req.config;
        cfg.variant = req.variants[i];
        fused[i] = fuse(ms, pan, cfg);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(req.threads > 0 ? req.threads : resolve_thread_count(), 1,
                                 static_cast<int>(req.variants.size()));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::vector<MetricsReport> reports;
  for (std::size_t i = 0; i < req.variants.size(); ++i) {
    const auto v = req.variants[i];
    write_netpbm(variant_output_path(req.out, v, multiple), *fused[i]);
    auto report = evaluate(*fused[i], reference, req.levels);
    report.method = method_label(v);
    report.variant = std::string(to_string(v));
    report.mode = std::string(to_string(req.config.inverse_mode));
    report.match = std::string(to_string(req.config.match_mode));
    reports.push_back(std::move(report));
  }
  if (!req.report.empty()) write_file_atomic(req.report, render_metrics(reports, req.format));
  return reports;
}

std::string cmd_variants(ReportFormat format) {
  const auto rows = consistency_report();
  if (format == ReportFormat::Csv) return consistency_to_csv(rows);
  return consistency_to_json(rows).dump(2) + '\n';
}

void cmd_synth(const SynthRequest& req) {
  const auto scene = make_synthetic_scene(req.seed, req.width, req.height, req.factor);
  std::filesystem::create_directories(req.out_dir);
  write_netpbm(req.out_dir / "ground_truth.ppm", scene.ground_truth);
  write_netpbm(req.out_dir / "ms.ppm", scene.ms);
  write_netpbm(req.out_dir / "pan.pgm", scene.pan);
}

std::string cmd_metrics(const MetricsRequest& req) {
  const Raster a = read_netpbm(req.image_a);
  const Raster b = read_netpbm(req.image_b);
  auto report = evaluate(a, b, req.levels);
  report.method = req.image_a.stem().string();
  const std::vector<MetricsReport> reports{report};
  auto text = render_metrics(reports, req.format);
  if (!req.report.empty()) write_file_atomic(req.report, text);
  return text;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"IHS-family pan-sharpening and fusion quality assessment"};
  app.require_subcommand(1);

  std::string format_name = "csv";
  int levels = 0;

  FuseRequest fuse_req;
  std::string variant_text = "ihs5";
  std::string mode_name = "corrected";
  std::string match_name = "mean-std";
  int cdf_levels = 0;
  auto* fuse_cmd = app.add_subcommand("fuse", "Pan-sharpen an MS image with a PAN image");
  fuse_cmd->add_option("--variant", variant_text, "Transform variant(s): hsv, ihs1..ihs7, hls, yiq; comma list or 'all'")
      ->capture_default_str();
  fuse_cmd->add_option("--mode", mode_name, "Inverse mode: paper-exact or corrected")->capture_default_str();
  fuse_cmd->add_option("--match", match_name, "PAN matching: mean-std, cdf or none")->capture_default_str();
  fuse_cmd->add_option("--alpha", fuse_req.config.alpha, "Weight of the matched PAN intensity")->capture_default_str();
  fuse_cmd->add_option("--beta", fuse_req.config.beta, "Weight of the MS intensity")->capture_default_str();
  fuse_cmd->add_option("--bit-depth", fuse_req.config.output_bit_depth, "Output bit depth")->capture_default_str();
  fuse_cmd->add_option("--ms", fuse_req.ms, "Multispectral input (P3/P6)")->required();
  fuse_cmd->add_option("--pan", fuse_req.pan, "Panchromatic input (P2/P5)")->required();
  fuse_cmd->add_option("--out", fuse_req.out, "Fused output image (P6)")->required();
  fuse_cmd->add_option("--report", fuse_req.report, "Metrics report path");
  fuse_cmd->add_option("--format", format_name, "Report format: csv or json")->capture_default_str();
  fuse_cmd->add_option("--levels", cdf_levels, "Histogram levels for CDF matching and entropy");

  auto* variants_cmd = app.add_subcommand("variants", "Audit every printed transform pair");
  std::filesystem::path variants_report;
  variants_cmd->add_option("--report", variants_report, "Write the audit here instead of stdout");
  variants_cmd->add_option("--format", format_name, "csv or json")->capture_default_str();

  SynthRequest synth_req;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a deterministic synthetic test scene");
  synth_cmd->add_option("--seed", synth_req.seed, "64-bit PRNG seed")->capture_default_str();
  synth_cmd->add_option("--width", synth_req.width, "Ground-truth width")->capture_default_str();
  synth_cmd->add_option("--height", synth_req.height, "Ground-truth height")->capture_default_str();
  synth_cmd->add_option("--factor", synth_req.factor, "MS downsampling factor")->capture_default_str();
  synth_cmd->add_option("--out", synth_req.out_dir, "Output directory")->capture_default_str();

  MetricsRequest metrics_req;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compare a measured image against a reference");
  metrics_cmd->add_option("image_a", metrics_req.image_a, "Measured image")->required();
  metrics_cmd->add_option("image_b", metrics_req.image_b, "Reference image")->required();
  metrics_cmd->add_option("--report", metrics_req.report, "Write the report here instead of stdout");
  metrics_cmd->add_option("--format", format_name, "csv or json")->capture_default_str();
  metrics_cmd->add_option("--levels", levels, "Entropy histogram levels (default 2^bit_depth)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    const auto format = parse_report_format(format_name);
    if (*fuse_cmd) {
      fuse_req.variants = parse_variant_list(variant_text);
      fuse_req.config.inverse_mode = parse_inverse_mode(mode_name);
      fuse_req.config.match_mode = parse_match_mode(match_name);
      if (cdf_levels > 0) fuse_req.config.cdf_levels = cdf_levels;
      fuse_req.levels = cdf_levels;
      fuse_req.format = format;
      cmd_fuse(fuse_req);
    } else if (*variants_cmd) {
      const auto text = cmd_variants(format);
      if (variants_report.empty()) {
        std::cout << text;
      } else {
        write_file_atomic(variants_report, text);
      }
    } else if (*synth_cmd) {
      cmd_synth(synth_req);
    } else if (*metrics_cmd) {
      metrics_req.format = format;
      metrics_req.levels = levels;
      const auto text = cmd_metrics(metrics_req);
      if (metrics_req.report.empty()) std::cout << text;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ihsfuse::harness
