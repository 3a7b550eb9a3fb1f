#pragma once

namespace dimwit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dimwit
