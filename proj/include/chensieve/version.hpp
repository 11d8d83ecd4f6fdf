#pragma once

namespace chensieve {

inline constexpr const char* kVersion = "0.1.0";

/// Version of the JSON report schemas emitted by the CLI (see docs/schemas.md).
inline constexpr int kSchemaVersion = 1;

} // namespace chensieve
