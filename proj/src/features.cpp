#include "dupdetect/features.hpp"

#include "dupdetect/parallel.hpp"

namespace dupdetect {

std::vector<BlockRecord> build_feature_matrix(const RasterImage& img,
                                              const DetectorConfig& config) {
  return build_feature_matrix(img, config, worker_count());
}

std::vector<BlockRecord> build_feature_matrix(const RasterImage& img,
                                              const DetectorConfig& config,
                                              int workers) {
  config.validate();
  const int b = config.block_size;
  const Eigen::Index rows = img.rows();
  const Eigen::Index cols = img.cols();
  if (rows < b || cols < b) {
    throw std::invalid_argument("build_feature_matrix: image smaller than the block size");
  }

  const Plane luma = rgb_to_luma(img);
  const DctBasis basis(b);
  const Eigen::Index origin_rows = rows - b + 1;
  const Eigen::Index origin_cols = cols - b + 1;

  std::vector<BlockRecord> records(
      static_cast<std::size_t>(origin_rows * origin_cols));

  parallel_chunks(0, origin_rows, workers, [&](Eigen::Index r0, Eigen::Index r1) {
    for (Eigen::Index i = r0; i < r1; ++i) {
      for (Eigen::Index j = 0; j < origin_cols; ++j) {
        BlockRecord& rec = records[static_cast<std::size_t>(i * origin_cols + j)];
        rec.origin = {static_cast<int>(i), static_cast<int>(j)};
        rec.feature = block_features(img.r.block(i, j, b, b),
                                     img.g.block(i, j, b, b),
                                     img.b.block(i, j, b, b),
                                     luma.block(i, j, b, b), basis);
      }
    }
  });

  return records;
}

}  // namespace dupdetect
