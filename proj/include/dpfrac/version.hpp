#pragma once

namespace dpfrac {

inline constexpr const char* kVersion = "0.1.0";

// Identifier of the seeded generator used everywhere randomness appears.
// Identical seeds must give identical artifacts across platforms, so the
// algorithm is pinned here and named in every emitted manifest.
inline constexpr const char* kRngAlgorithm = "splitmix64-v1";

}  // namespace dpfrac
