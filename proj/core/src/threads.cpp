#include "walkbound/threads.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace walkbound {

int worker_count(long long work_items) {
  if (work_items <= 1) return 1;
  long long cap = 0;
  if (const char* env = std::getenv("WALKBOUND_THREADS")) {
    cap = std::atoll(env);
    if (cap < 1) cap = 1;
  } else {
    cap = static_cast<long long>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
  }
  return static_cast<int>(std::min(cap, work_items));
}

void parallel_for(long long count, const std::function<void(long long, long long)>& fn) {
  if (count <= 0) return;
  int workers = worker_count(count);
  if (workers == 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  long long chunk = (count + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    long long begin = t * chunk;
    long long end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace walkbound
