#pragma once

#include <cstdint>

#include "crossfam/family.hpp"

namespace crossfam {

/// Seeded random instances for the property suites. Every function is a
/// pure function of its seed (raw mt19937_64 output, no platform-dependent
/// distributions), so reruns are reproducible anywhere. Each draws by
/// rejection from small universes until the stated shape is hit.

/// Cross-intersecting Sperner family whose lexicographically first A-edge
/// and B-edge differ (the shape the four-color construction needs).
Family random_cross_sperner_family(std::uint64_t seed);

/// Cross-intersecting Sperner family, every edge of size >= 3, no edge
/// shared between the sides.
Family random_cross_sperner_min3_family(std::uint64_t seed);

/// Critical cross-intersecting family with max edge size <= max_edge_size.
Family random_critical_family(std::uint64_t seed, int max_edge_size = 3);

/// `count` distinct non-empty edges with max edge size exactly n.
std::vector<Edge> random_edge_set(std::uint64_t seed, int n, std::size_t count);

} // namespace crossfam
