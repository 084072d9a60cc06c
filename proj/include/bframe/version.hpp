#pragma once

namespace bframe {

inline constexpr const char* library_version = "0.1.0";
inline constexpr const char* report_schema_version = "1";

}  // namespace bframe
