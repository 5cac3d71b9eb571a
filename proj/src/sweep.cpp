#include "dupdetect/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dupdetect/image_io.hpp"
#include "dupdetect/kv.hpp"
#include "dupdetect/match.hpp"
#include "dupdetect/metrics.hpp"

namespace dupdetect {

namespace {

const char* kKnownAxes[] = {"jpeg", "blur", "awgn", "scale", "shift", "rotate"};

bool known_axis(const std::string& name) {
  for (const char* axis : kKnownAxes) {
    if (name == axis) return true;
  }
  return false;
}

std::string format_percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", fraction * 100.0);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

void SweepPlan::validate() const {
  if (image_path.empty()) throw std::invalid_argument("sweep plan: missing image");
  if (spec_path.empty()) throw std::invalid_argument("sweep plan: missing spec");
  if (!known_axis(attack)) {
    throw std::invalid_argument("sweep plan: unknown attack axis '" + attack + "'");
  }
  if (params.empty()) {
    throw std::invalid_argument("sweep plan: parameter list is empty");
  }
  for (const std::string& param : params) make_op(param);
  config.validate();
}

AttackOp SweepPlan::make_op(const std::string& param) const {
  return AttackOp::parse(attack + ":" + param);
}

SweepPlan SweepPlan::parse(const std::string& text) {
  const auto kv = parse_kv_document(text);
  for (const auto& [key, value] : kv) {
    (void)value;
    if (key != "image" && key != "spec" && key != "attack" && key != "params" &&
        key != "target" && key != "seed" && key != "block_size" && key != "tl" &&
        key != "t2" && key != "ts" && key != "tn") {
      throw std::invalid_argument("unknown sweep plan key '" + key + "'");
    }
  }
  SweepPlan plan;
  plan.image_path = kv_require(kv, "image");
  plan.spec_path = kv_require(kv, "spec");
  plan.attack = kv_require(kv, "attack");
  plan.params = split_ws(kv_require(kv, "params"));
  if (const auto it = kv.find("target"); it != kv.end()) {
    if (it->second == "whole") {
      plan.whole_image = true;
    } else if (it->second == "patch") {
      plan.whole_image = false;
    } else {
      throw std::invalid_argument("target must be 'whole' or 'patch', got '" +
                                  it->second + "'");
    }
  }
  if (const auto it = kv.find("seed"); it != kv.end()) {
    plan.seed = static_cast<std::uint64_t>(std::stoull(it->second));
  }
  if (const auto it = kv.find("block_size"); it != kv.end()) {
    plan.config = DetectorConfig::for_block_size(parse_int(it->second));
  }
  if (const auto it = kv.find("tl"); it != kv.end()) {
    plan.config.feature_distance_threshold = parse_double(it->second);
  }
  if (const auto it = kv.find("t2"); it != kv.end()) {
    plan.config.min_separation = parse_double(it->second);
  }
  if (const auto it = kv.find("ts"); it != kv.end()) {
    plan.config.shift_vote_threshold = parse_int(it->second);
  }
  if (const auto it = kv.find("tn"); it != kv.end()) {
    plan.config.neighbor_window = parse_int(it->second);
  }
  plan.validate();
  return plan;
}

SweepPlan SweepPlan::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep plan: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<SweepRow> run_sweep(const SweepPlan& plan) {
  plan.validate();
  const RasterImage base = load_image(plan.image_path);
  const ForgerySpec spec = ForgerySpec::load(plan.spec_path);
  const std::string target = plan.whole_image ? "whole" : "patch";

  std::vector<SweepRow> rows;
  rows.reserve(plan.params.size());
  for (const std::string& param : plan.params) {
    SweepRow row;
    row.attack = plan.attack;
    row.param = param;
    row.target = target;
    try {
      ForgerySpec attacked = spec;
      const AttackOp op = plan.make_op(param);
      if (plan.whole_image) {
        attacked.post_paste.push_back(op);
      } else {
        attacked.pre_paste.push_back(op);
      }
      const ForgeryResult forged = apply_forgery(base, attacked, plan.seed);
      const DetectionResult detection = detect(forged.image, plan.config);
      const MetricsReport metrics = compute_metrics(detection.mask, forged.truth);
      row.ok = true;
      row.detection_rate = metrics.detection_rate;
      row.false_detection_rate = metrics.false_detection_rate;
    } catch (const std::exception& ex) {
      row.ok = false;
      row.error = ex.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "attack,param,target,d_percent,f_percent\n";
  for (const SweepRow& row : rows) {
    out += csv_escape(row.attack);
    out += ',';
    out += csv_escape(row.param);
    out += ',';
    out += csv_escape(row.target);
    out += ',';
    if (row.ok) {
      out += format_percent(row.detection_rate);
      out += ',';
      out += format_percent(row.false_detection_rate);
    } else {
      out += "error,";
      out += csv_escape(row.error);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dupdetect
