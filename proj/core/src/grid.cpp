#include "symid/grid.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace symid {

int resolve_worker_count(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) {
      throw std::invalid_argument("workers: must be >= 1");
    }
    return *requested;
  }
  if (const char* env = std::getenv("SYMID_WORKERS")) {
    int value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoi(env, &pos);
      if (pos != std::string(env).size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SYMID_WORKERS: invalid value '") + env +
                                  "'");
    }
    if (value < 1) {
      throw std::invalid_argument("SYMID_WORKERS: must be >= 1");
    }
    return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<IdentityReport> run_instances(std::span<const Instance> instances,
                                          int workers) {
  if (workers < 1) {
    throw std::invalid_argument("workers: must be >= 1");
  }
  std::vector<IdentityReport> out(instances.size());
  if (instances.empty()) {
    return out;
  }
  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(workers), instances.size());
  if (thread_count <= 1) {
    for (std::size_t k = 0; k < instances.size(); ++k) {
      out[k] = run_instance(instances[k]);
    }
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= instances.size() || failed.load()) {
        return;
      }
      try {
        out[k] = run_instance(instances[k]);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) {
          error = std::current_exception();
        }
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (std::size_t k = 0; k < thread_count; ++k) {
    pool.emplace_back(work);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return out;
}

}  // namespace symid
