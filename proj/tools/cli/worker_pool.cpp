#include "worker_pool.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace bellforge::cli {

unsigned worker_count() {
  const unsigned fallback = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("BELLFORGE_THREADS");
  if (env == nullptr) return fallback;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return fallback;
  return value;
}

}  // namespace bellforge::cli
