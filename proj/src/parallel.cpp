#include "mbk/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mbk {

unsigned worker_count() {
  if (const char* env = std::getenv("MBK_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min(v, 1024L));
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace mbk
