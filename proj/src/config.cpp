#include "wmono/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace wmono {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("WMONO_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<std::size_t>(parsed);
    }
  }
  return std::size_t{1} << 20;
}

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t dimension_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_dimension_cap(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("dimension cap must be positive");
  cap_storage().store(cap, std::memory_order_relaxed);
}

void check_cap(std::size_t amplitudes, const char* context) {
  const std::size_t cap = dimension_cap();
  if (amplitudes > cap) {
    throw CapExceededError(std::string(context) + ": requires " +
                           std::to_string(amplitudes) + " amplitudes, cap is " +
                           std::to_string(cap));
  }
}

}  // namespace wmono
