#pragma once

// Shared helpers for the unit tests: a tiny deterministic generator for
// property-style checks, plus a few families used across suites.

#include <cstdint>
#include <random>
#include <vector>

#include "crossfam/family.hpp"

namespace testsup {

using crossfam::Edge;
using crossfam::Family;

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int bounded(int lo, int hi) {
        return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Edge subset(int universe, int size) {
        Edge e;
        size = std::min(size, universe);
        while (e.size() < size) e.add(bounded(0, universe - 1));
        return e;
    }

    std::vector<Edge> edge_list(int universe, int count, int min_size, int max_size) {
        std::vector<Edge> out;
        for (int i = 0; i < count; ++i)
            out.push_back(subset(universe, bounded(min_size, std::min(max_size, universe))));
        return out;
    }
};

inline Family cycle(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return crossfam::make_family(n, edges, {});
}

// The K4 family: two disjoint pairs against all four cross pairs.
inline Family k4_family() {
    return crossfam::make_family(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

} // namespace testsup
