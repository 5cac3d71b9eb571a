#include "dupdetect/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dupdetect {

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("DUPDETECT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
      // malformed value falls through to auto
    }
  }
  return static_cast<int>(hw);
}

void parallel_chunks(Eigen::Index begin, Eigen::Index end, int workers,
                     const std::function<void(Eigen::Index, Eigen::Index)>& fn) {
  const Eigen::Index n = end - begin;
  if (n <= 0) return;
  workers = std::max(1, workers);
  const Eigen::Index chunks = std::min<Eigen::Index>(workers, n);
  if (chunks == 1) {
    fn(begin, end);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (Eigen::Index c = 0; c < chunks; ++c) {
    const Eigen::Index lo = begin + n * c / chunks;
    const Eigen::Index hi = begin + n * (c + 1) / chunks;
    pool.emplace_back([&, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dupdetect
