#pragma once

namespace dirichlet {

inline constexpr const char kVersion[] = "0.1.0";
inline constexpr const char kReportSchema[] = "dirichlet-lab/1";

}  // namespace dirichlet
