#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace tagad {

/// How tangent extraction treats function values.
enum class Mode {
  /// Rewrite the closure body under a tangent node.
  NaivePostcompose,
  /// Wrap the function without opening it.
  NaiveOpaque,
  /// Opaque wrapper that renames the caller's perturbations to a fresh tag
  /// around every application.
  Guarded,
};

inline constexpr std::array<Mode, 3> all_modes{Mode::NaivePostcompose, Mode::NaiveOpaque,
                                               Mode::Guarded};

constexpr std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::NaivePostcompose: return "naive-postcompose";
    case Mode::NaiveOpaque: return "naive-opaque";
    case Mode::Guarded: return "guarded";
  }
  return "?";
}

constexpr std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : all_modes) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

}  // namespace tagad
