#include "optiframe/parallel.hpp"

#include <cstdlib>
#include <string>

namespace optiframe {

std::size_t worker_count() {
  if (const char* env = std::getenv("OPTIFRAME_THREADS"); env != nullptr) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace optiframe
