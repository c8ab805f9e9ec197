#pragma once

namespace scflip {
inline constexpr const char* kToolName = "scflip";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace scflip
