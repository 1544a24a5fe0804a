#pragma once

namespace qrabi {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qrabi
