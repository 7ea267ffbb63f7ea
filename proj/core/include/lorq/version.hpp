#pragma once

namespace lorq {

inline constexpr const char* kVersion = "0.1.0";

}
