#include "rootline/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rootline {

std::size_t worker_count() {
  if (const char* env = std::getenv("ROOTLINE_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_blocks(std::size_t blocks, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t b = next.fetch_add(1);
        if (b >= blocks) return;
        try {
          body(b);
        } catch (...) {
          std::lock_guard<std::mutex> guard(failure_lock);
          if (!failure) failure = std::current_exception();
          next = blocks;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rootline
