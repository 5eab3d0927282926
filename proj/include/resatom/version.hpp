#pragma once

namespace resatom {

inline constexpr const char* TOOLKIT_VERSION = "0.1.0";

}  // namespace resatom
