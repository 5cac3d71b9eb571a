#include "dupdetect/config.hpp"

#include <stdexcept>
#include <string>

namespace dupdetect {

DetectorConfig DetectorConfig::for_block_size(int b) {
  DetectorConfig cfg;
  cfg.block_size = b;
  cfg.min_separation = 2.0 * b;
  cfg.shift_vote_threshold = b + 2;
  cfg.neighbor_window = b;
  cfg.validate();
  return cfg;
}

void DetectorConfig::validate() const {
  if (block_size < 8 || block_size % 2 != 0) {
    throw std::invalid_argument("DetectorConfig: block size must be even and >= 8, got " +
                                std::to_string(block_size));
  }
  if (!(feature_distance_threshold > 0.0)) {
    throw std::invalid_argument("DetectorConfig: feature distance threshold must be > 0");
  }
  if (!(min_separation > 0.0)) {
    throw std::invalid_argument("DetectorConfig: minimum separation must be > 0");
  }
  if (shift_vote_threshold < 1) {
    throw std::invalid_argument("DetectorConfig: shift vote threshold must be >= 1");
  }
  if (neighbor_window < 1) {
    throw std::invalid_argument("DetectorConfig: neighbor window must be >= 1");
  }
}

}  // namespace dupdetect
