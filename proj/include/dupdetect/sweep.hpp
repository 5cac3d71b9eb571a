#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dupdetect/config.hpp"
#include "dupdetect/forge.hpp"

namespace dupdetect {

/// One robustness sweep: a base image, a forgery spec, and an attack axis
/// whose parameter values are tried one at a time. target chooses whether
/// the attack hits the copied patch (pre-paste) or the whole forged image
/// (post-paste).
struct SweepPlan {
  std::string image_path;
  std::string spec_path;
  std::string attack;               ///< jpeg | blur | awgn | scale | shift | rotate
  std::vector<std::string> params;  ///< one token per row, e.g. "90" or "1,0"
  bool whole_image = true;          ///< target = whole (default) or patch
  DetectorConfig config;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when the axis is unknown, the parameter
  /// list is empty, or a parameter does not parse for the axis.
  void validate() const;

  /// Key/value document:
  ///   image  = base.png
  ///   spec   = copy.spec
  ///   attack = jpeg
  ///   params = 100 90 80 70
  ///   target = whole            # or patch; optional
  ///   seed   = 7                # optional
  ///   block_size/tl/t2/ts/tn    # optional detector overrides
  static SweepPlan parse(const std::string& text);
  static SweepPlan load(const std::string& path);

  /// The attack op for one parameter token, e.g. "jpeg" + "90".
  AttackOp make_op(const std::string& param) const;
};

/// Outcome of one sweep row. On failure `error` carries the diagnostic and
/// the rates are meaningless.
struct SweepRow {
  std::string attack;
  std::string param;
  std::string target;
  bool ok = false;
  double detection_rate = 0.0;
  double false_detection_rate = 0.0;
  std::string error;
};

/// Forge -> detect -> evaluate for every parameter, in plan order. A row
/// that throws becomes an error row; the sweep continues.
std::vector<SweepRow> run_sweep(const SweepPlan& plan);

/// CSV with header "attack,param,target,d_percent,f_percent"; rates are
/// percentages with 4 decimals. Error rows carry "error" in the d column
/// and the diagnostic in the f column.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace dupdetect
