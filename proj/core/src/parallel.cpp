#include "resalg/parallel.hpp"

#include <cstdlib>

namespace resalg {

int worker_count() {
  int count = 0;
  if (const char* env = std::getenv("RESALG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 64)
      count = static_cast<int>(v);
  }
  if (count == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    count = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return count < 1 ? 1 : count;
}

}  // namespace resalg
