#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tagad {

/// Identifies the tangent space introduced by one instantiation of the
/// derivative operator. Larger ids were allocated later.
struct Tag {
  std::uint64_t id = 0;

  friend constexpr auto operator<=>(Tag, Tag) = default;
};

/// Allocates a process-unique tag. Thread-safe; ids are strictly increasing.
Tag fresh_tag();

/// Id the next call to fresh_tag() will return.
std::uint64_t peek_tag_counter();

/// Moves the counter forward so the next tag has id `next`. Moving it
/// backwards would allow reuse, so that throws std::invalid_argument.
void seed_tag_counter(std::uint64_t next);

inline std::string to_string(Tag t) { return "t" + std::to_string(t.id); }

}  // namespace tagad
