#pragma once

namespace simpcodes {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "simpcodes/report/v1";

}  // namespace simpcodes
