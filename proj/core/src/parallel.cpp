#include "euclab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace euclab {

std::size_t thread_count() {
  if (const char* env = std::getenv("EUCLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace euclab
