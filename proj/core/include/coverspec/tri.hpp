#pragma once

#include <string_view>

namespace coverspec {

/// Three-valued answer for questions a partial class table cannot settle.
enum class Tri { False, True, Unknown };

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::True : Tri::False; }

constexpr std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace coverspec
