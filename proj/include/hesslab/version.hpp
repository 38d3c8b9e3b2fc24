#pragma once

namespace hesslab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hesslab
