#include "idio/parallel.hpp"

#include <cstdlib>
#include <string>

namespace idio {

unsigned default_threads() {
  if (const char* env = std::getenv("IDIO_THREADS")) {
    try {
      long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace idio
