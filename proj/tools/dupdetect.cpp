// Command-line front end: detect duplicated regions, generate ground-truth
// forgeries, score masks, run attack sweeps, and synthesize test images.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "dupdetect/config.hpp"
#include "dupdetect/forge.hpp"
#include "dupdetect/image_io.hpp"
#include "dupdetect/match.hpp"
#include "dupdetect/metrics.hpp"
#include "dupdetect/sweep.hpp"
#include "dupdetect/synth.hpp"

namespace {

namespace fs = std::filesystem;

// "dir/photo.png" -> "dir/photo" (suffixes are appended to the stem).
std::string strip_extension(const std::string& path) {
  fs::path p(path);
  fs::path out = p.parent_path() / p.stem();
  return out.string();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write: " + path);
}

struct ConfigFlags {
  int block_size = 0;
  double tl = 0.0;
  double t2 = 0.0;
  int ts = 0;
  int tn = 0;
  bool signed_shifts = false;

  CLI::Option* block_size_opt = nullptr;
  CLI::Option* tl_opt = nullptr;
  CLI::Option* t2_opt = nullptr;
  CLI::Option* ts_opt = nullptr;
  CLI::Option* tn_opt = nullptr;

  void attach(CLI::App* cmd) {
    block_size_opt = cmd->add_option("--block-size", block_size,
                                     "Analysis block side length (even, >= 8); "
                                     "rescales the other thresholds unless "
                                     "they are given explicitly");
    tl_opt = cmd->add_option("--tl", tl, "Feature distance threshold");
    t2_opt = cmd->add_option("--t2", t2, "Minimum origin separation in pixels");
    ts_opt = cmd->add_option("--ts", ts, "Minimum votes per shift vector");
    tn_opt = cmd->add_option("--tn", tn, "Sorted-neighbor window size");
    cmd->add_flag("--signed-shifts", signed_shifts,
                  "Histogram signed shift vectors instead of componentwise "
                  "absolute values");
  }

  dupdetect::DetectorConfig build() const {
    dupdetect::DetectorConfig config;
    if (block_size_opt->count() > 0) {
      config = dupdetect::DetectorConfig::for_block_size(block_size);
    }
    if (tl_opt->count() > 0) config.feature_distance_threshold = tl;
    if (t2_opt->count() > 0) config.min_separation = t2;
    if (ts_opt->count() > 0) config.shift_vote_threshold = ts;
    if (tn_opt->count() > 0) config.neighbor_window = tn;
    config.signed_shifts = signed_shifts;
    config.validate();
    return config;
  }
};

int run_detect(const std::string& image_path,
               const dupdetect::DetectorConfig& config) {
  const dupdetect::RasterImage img = dupdetect::load_image(image_path);
  const dupdetect::DetectionResult result = dupdetect::detect(img, config);

  const std::string stem = strip_extension(image_path);
  const std::string mask_path = stem + ".detected.png";
  const std::string report_path = stem + ".report.json";
  dupdetect::save_mask(result.mask, mask_path);
  write_text_file(report_path, dupdetect::to_json_string(result.report) + "\n");

  if (result.report.forged()) {
    std::cout << "duplicated regions found: " << result.report.confirmed_pairs
              << " block pairs across " << result.report.confirmed_shifts.size()
              << " shift vectors; mask: " << mask_path << "\n";
    return 2;
  }
  std::cout << "clean: no duplicated regions; mask: " << mask_path << "\n";
  return 0;
}

int run_forge(const std::string& image_path, const std::string& spec_path,
              std::uint64_t seed, std::string out_name) {
  const dupdetect::RasterImage img = dupdetect::load_image(image_path);
  const dupdetect::ForgerySpec spec = dupdetect::ForgerySpec::load(spec_path);
  const dupdetect::ForgeryResult result = dupdetect::apply_forgery(img, spec, seed);

  if (out_name.empty()) out_name = strip_extension(spec_path) + ".forged";
  dupdetect::save_png(result.image, out_name + ".png");
  dupdetect::save_mask(result.truth, out_name + ".mask.png");
  dupdetect::ForgerySpec echo = spec;  // normalized echo of what was executed
  echo.save(out_name + ".spec");
  std::cout << "wrote " << out_name << ".png, " << out_name << ".mask.png, "
            << out_name << ".spec\n";
  return 0;
}

int run_evaluate(const std::string& detected_path, const std::string& truth_path) {
  const dupdetect::Mask detected = dupdetect::load_mask(detected_path);
  const dupdetect::Mask truth = dupdetect::load_mask(truth_path);
  const dupdetect::MetricsReport m = dupdetect::compute_metrics(detected, truth);
  std::printf("d=%.4f f=%.4f\n", m.detection_rate * 100.0,
              m.false_detection_rate * 100.0);
  return 0;
}

int run_sweep_cmd(const std::string& plan_path, const std::string& out_path) {
  const dupdetect::SweepPlan plan = dupdetect::SweepPlan::load(plan_path);
  const std::vector<dupdetect::SweepRow> rows = dupdetect::run_sweep(plan);
  const std::string csv = dupdetect::sweep_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    write_text_file(out_path, csv);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int run_synth(const std::string& out_path, int rows, int cols,
              std::uint64_t seed) {
  dupdetect::save_png(dupdetect::synth_texture(rows, cols, seed), out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copy-move forgery toolkit: block-matching detector, "
               "ground-truth forgery generator, and evaluation harness"};
  app.require_subcommand(1);

  // detect
  std::string detect_image;
  ConfigFlags detect_flags;
  CLI::App* detect_cmd = app.add_subcommand(
      "detect", "Find duplicated regions; exit 0 clean, 2 forged, 1 error");
  detect_cmd->add_option("image", detect_image, "PNG or JPEG image")->required();
  detect_flags.attach(detect_cmd);

  // forge
  std::string forge_image, forge_spec, forge_out;
  std::uint64_t forge_seed = 0;
  CLI::App* forge_cmd = app.add_subcommand(
      "forge", "Apply a forgery spec; writes <out>.png/.mask.png/.spec");
  forge_cmd->add_option("image", forge_image, "Untampered source image")->required();
  forge_cmd->add_option("spec", forge_spec, "Forgery spec file")->required();
  forge_cmd->add_option("--seed", forge_seed, "Seed for randomized attacks");
  forge_cmd->add_option("--out", forge_out,
                        "Output name stem (default: <spec stem>.forged)");

  // evaluate
  std::string eval_detected, eval_truth;
  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "Score a detection mask against ground truth");
  eval_cmd->add_option("mask", eval_detected, "Detected mask PNG")->required();
  eval_cmd->add_option("truth", eval_truth, "Ground-truth mask PNG")->required();

  // sweep
  std::string sweep_plan, sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run an attack-parameter sweep; emits CSV");
  sweep_cmd->add_option("plan", sweep_plan, "Sweep plan file")->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (default: stdout)");

  // synth
  std::string synth_out;
  int synth_rows = 200, synth_cols = 330;
  std::uint64_t synth_seed = 1;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "Write a deterministic textured test image");
  synth_cmd->add_option("out", synth_out, "Output PNG path")->required();
  synth_cmd->add_option("--rows", synth_rows, "Image height (default 200)");
  synth_cmd->add_option("--cols", synth_cols, "Image width (default 330)");
  synth_cmd->add_option("--seed", synth_seed, "Texture seed (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (detect_cmd->parsed()) {
      return run_detect(detect_image, detect_flags.build());
    }
    if (forge_cmd->parsed()) {
      return run_forge(forge_image, forge_spec, forge_seed, forge_out);
    }
    if (eval_cmd->parsed()) {
      return run_evaluate(eval_detected, eval_truth);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep_cmd(sweep_plan, sweep_out);
    }
    if (synth_cmd->parsed()) {
      return run_synth(synth_out, synth_rows, synth_cols, synth_seed);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
