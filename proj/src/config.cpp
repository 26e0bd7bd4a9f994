#include "symgame/config.hpp"

#include <atomic>

#include "symgame/error.hpp"

namespace symgame {

namespace {
std::atomic<std::size_t> g_size_cap{std::size_t{1} << 24};
}

std::size_t size_cap() noexcept { return g_size_cap.load(); }

void set_size_cap(std::size_t cap) noexcept { g_size_cap.store(cap); }

std::size_t checked_pow(std::size_t base, unsigned exp) {
  const std::size_t cap = size_cap();
  std::size_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) {
      throw SizeLimitError("index space " + std::to_string(base) + "^" +
                           std::to_string(exp) + " exceeds the size cap");
    }
    out *= base;
  }
  return out;
}

}  // namespace symgame
