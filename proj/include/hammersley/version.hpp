#pragma once

namespace hammersley {

inline constexpr const char* kVersion = "hammersley 0.1.0";

}  // namespace hammersley
