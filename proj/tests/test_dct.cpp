#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dupdetect/dct.hpp"

using namespace dupdetect;

namespace {

// Independent oracle: the textbook double-sum definition of the orthonormal
// 2-D DCT-II, evaluated coefficient by coefficient.
Eigen::MatrixXd naive_dct2(const Eigen::MatrixXd& block) {
  const Eigen::Index b = block.rows();
  Eigen::MatrixXd cos_table(b, b);
  for (Eigen::Index u = 0; u < b; ++u) {
    for (Eigen::Index x = 0; x < b; ++x) {
      cos_table(u, x) = std::cos((2.0 * x + 1.0) * u * std::numbers::pi / (2.0 * b));
    }
  }
  const double a0 = std::sqrt(1.0 / static_cast<double>(b));
  const double au = std::sqrt(2.0 / static_cast<double>(b));
  Eigen::MatrixXd out(b, b);
  for (Eigen::Index u = 0; u < b; ++u) {
    for (Eigen::Index v = 0; v < b; ++v) {
      double acc = 0.0;
      for (Eigen::Index x = 0; x < b; ++x) {
        for (Eigen::Index y = 0; y < b; ++y) {
          acc += block(x, y) * cos_table(u, x) * cos_table(v, y);
        }
      }
      out(u, v) = (u == 0 ? a0 : au) * (v == 0 ? a0 : au) * acc;
    }
  }
  return out;
}

Eigen::MatrixXd random_block(Eigen::Index b, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::MatrixXd block(b, b);
  for (Eigen::Index r = 0; r < b; ++r) {
    for (Eigen::Index c = 0; c < b; ++c) block(r, c) = uni(rng);
  }
  return block;
}

}  // namespace

TEST_CASE("basis is orthonormal") {
  for (const Eigen::Index b : {4, 8, 16}) {
    const DctBasis basis(b);
    const Eigen::MatrixXd gram = basis.matrix() * basis.matrix().transpose();
    CHECK((gram - Eigen::MatrixXd::Identity(b, b)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("matches the double-sum definition on random blocks") {
  const DctBasis basis(16);
  std::mt19937_64 rng(42);
  double max_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Eigen::MatrixXd block = random_block(16, rng);
    max_err = std::max(max_err, (dct2(basis, block) - naive_dct2(block)).cwiseAbs().maxCoeff());
  }
  CHECK(max_err < 1e-9);
}

TEST_CASE("impulse at the origin transforms to a separable outer product") {
  const Eigen::Index b = 16;
  const DctBasis basis(b);
  Eigen::MatrixXd impulse = Eigen::MatrixXd::Zero(b, b);
  impulse(0, 0) = 1.0;
  const Eigen::MatrixXd coeffs = dct2(basis, impulse);
  // DC of a unit impulse is a(0)^2 = 1/b.
  CHECK(coeffs(0, 0) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  const Eigen::MatrixXd expected = basis.matrix().col(0) * basis.matrix().col(0).transpose();
  CHECK((coeffs - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("constant block concentrates in the DC coefficient") {
  const Eigen::Index b = 16;
  const DctBasis basis(b);
  const double c = 0.37;
  const Eigen::MatrixXd coeffs = dct2(basis, Eigen::MatrixXd::Constant(b, b, c));
  // DC = b * c for the orthonormal normalization.
  CHECK(coeffs(0, 0) == doctest::Approx(16.0 * c).epsilon(1e-12));
  Eigen::MatrixXd ac = coeffs;
  ac(0, 0) = 0.0;
  CHECK(ac.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transform preserves energy") {
  const DctBasis basis(16);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const Eigen::MatrixXd block = random_block(16, rng);
    CHECK(std::abs(block.norm() - dct2(basis, block).norm()) < 1e-9);
  }
}

TEST_CASE("idct2 inverts dct2") {
  const DctBasis basis(16);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const Eigen::MatrixXd block = random_block(16, rng);
    CHECK((idct2(basis, dct2(basis, block)) - block).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("transform is linear") {
  const DctBasis basis(16);
  std::mt19937_64 rng(11);
  const Eigen::MatrixXd x = random_block(16, rng);
  const Eigen::MatrixXd y = random_block(16, rng);
  const Eigen::MatrixXd lhs = dct2(basis, (0.6 * x + 1.7 * y).eval());
  const Eigen::MatrixXd rhs = 0.6 * dct2(basis, x) + 1.7 * dct2(basis, y);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("shape mismatches are rejected") {
  const DctBasis basis(16);
  CHECK_THROWS_AS(dct2(basis, Eigen::MatrixXd::Zero(8, 8)), std::invalid_argument);
  CHECK_THROWS_AS(idct2(basis, Eigen::MatrixXd::Zero(16, 8)), std::invalid_argument);
  CHECK_THROWS_AS(DctBasis(0), std::invalid_argument);
}
