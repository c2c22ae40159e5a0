#pragma once

namespace qwalk {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace qwalk
