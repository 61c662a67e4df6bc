#include "tagad/tag.hpp"

#include <atomic>
#include <stdexcept>

namespace tagad {

namespace {
std::atomic<std::uint64_t> next_tag_id{0};
}

Tag fresh_tag() { return Tag{next_tag_id.fetch_add(1, std::memory_order_relaxed)}; }

std::uint64_t peek_tag_counter() { return next_tag_id.load(std::memory_order_relaxed); }

void seed_tag_counter(std::uint64_t next) {
  std::uint64_t current = next_tag_id.load();
  while (true) {
    if (next < current) {
      throw std::invalid_argument("tag counter cannot move backwards (at " +
                                  std::to_string(current) + ", requested " +
                                  std::to_string(next) + ")");
    }
    if (next_tag_id.compare_exchange_weak(current, next)) return;
  }
}

}  // namespace tagad
