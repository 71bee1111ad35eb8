#pragma once

namespace rainbowlab {

inline constexpr const char* kVersion = "0.1.0";

// Hard limits for the exhaustive/canonical machinery. These are desk-scale
// guards: exceeding them raises GuardError instead of silently running for
// hours.
namespace guards {
inline constexpr int kEnumerateGraphsMaxN = 8;
inline constexpr int kExhaustiveAllGraphsMaxN = 5;
inline constexpr int kExhaustiveCompleteMaxN = 5;
inline constexpr int kExhaustiveUncoloredMaxN = 7;
inline constexpr long long kColoringEnumMaxEdges = 12;  // Bell(12) ~ 4.2M
inline constexpr int kCanonicalKeyMaxN = 12;
inline constexpr int kExactDisjointCyclesMaxN = 12;
inline constexpr int kExactDigraphPackMaxN = 14;
inline constexpr int kGallaiDecomposeMaxN = 12;
// Rejection sampling gives up once acceptance drops below this rate.
inline constexpr long long kSampleAttemptsPerInstance = 1000;
}  // namespace guards

}  // namespace rainbowlab
