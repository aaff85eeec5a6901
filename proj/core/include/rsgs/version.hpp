#pragma once

namespace rsgs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rsgs
