#pragma once

namespace syz {

/// Version tag recorded in cache entries; results cached under a different
/// version are ignored on load.
inline constexpr const char* ENGINE_VERSION = "0.1.0";

} // namespace syz
