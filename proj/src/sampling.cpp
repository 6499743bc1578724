#include "crossfam/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "crossfam/predicates.hpp"

namespace crossfam {

namespace {

constexpr std::uint64_t kMaxAttempts = 4'000'000;

int bounded(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Edge random_subset(std::mt19937_64& rng, int universe, int size) {
    Edge e;
    while (e.size() < size) e.add(bounded(rng, 0, universe - 1));
    return e;
}

std::vector<Edge> random_side(std::mt19937_64& rng, int universe, int count, int min_size,
                              int max_size) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(random_subset(rng, universe,
                                    bounded(rng, min_size, std::min(max_size, universe))));
    return out;
}

bool sides_share_edge(const Family& f) {
    for (const Edge& a : f.side_a)
        for (const Edge& b : f.side_b)
            if (a == b) return true;
    return false;
}

[[noreturn]] void sampler_exhausted(const char* what) {
    throw std::logic_error(std::string("sampler failed to hit shape: ") + what);
}

} // namespace

Family random_cross_sperner_family(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int u = bounded(rng, 4, 6);
        Family f = make_family_edges(u, random_side(rng, u, bounded(rng, 1, 3), 2, 3),
                                     random_side(rng, u, bounded(rng, 1, 3), 2, 3));
        if (!is_cross_intersecting(f) || !is_sperner(f)) continue;
        if (f.side_a.front() == f.side_b.front()) continue;
        return f;
    }
    sampler_exhausted("cross-intersecting Sperner family");
}

Family random_cross_sperner_min3_family(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int u = bounded(rng, 6, 8);
        Family f = make_family_edges(u, random_side(rng, u, bounded(rng, 1, 4), 3, 4),
                                     random_side(rng, u, bounded(rng, 1, 4), 3, 4));
        if (!is_cross_intersecting(f) || !is_sperner(f)) continue;
        if (sides_share_edge(f)) continue;
        return f;
    }
    sampler_exhausted("cross-intersecting Sperner family with min edge size 3");
}

Family random_critical_family(std::uint64_t seed, int max_edge_size) {
    std::mt19937_64 rng(seed);
    // Singleton families are critical and dominate naive rejection; keep a
    // few for the n = 1 corner but mostly demand larger edges.
    std::uint64_t roll = rng() % 10;
    int required_size = std::min(roll < 2 ? 1 : roll < 8 ? 2 : 3, max_edge_size);
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int u = bounded(rng, 2, 5);
        int cap = std::min(max_edge_size, u);
        Family f;
        if (rng() % 4 == 0) {
            // Mirrored shape (V, E, E); critical whenever E is "tight".
            std::vector<Edge> side = random_side(rng, u, bounded(rng, 1, 3), 1, cap);
            f = make_family_edges(u, side, side);
        } else {
            auto weighted_side = [&](int count) {
                std::vector<Edge> out;
                for (int i = 0; i < count; ++i) {
                    std::uint64_t w = rng() % 6;
                    int size = w < 1 ? 1 : w < 4 ? 2 : 3;
                    out.push_back(random_subset(rng, u, std::min(size, cap)));
                }
                return out;
            };
            f = make_family_edges(u, weighted_side(bounded(rng, 1, 4)),
                                  weighted_side(bounded(rng, 1, 4)));
        }
        if (crossfam::max_edge_size(f) < required_size) continue;
        if (is_critical(f)) return f;
    }
    sampler_exhausted("critical cross-intersecting family");
}

std::vector<Edge> random_edge_set(std::uint64_t seed, int n, std::size_t count) {
    if (n < 1) throw std::invalid_argument("max edge size must be at least 1");
    std::mt19937_64 rng(seed);
    int u = bounded(rng, std::max(n + 2, 5), 8);
    std::vector<Edge> out;
    out.push_back(random_subset(rng, u, n)); // pin the max size to exactly n
    std::uint64_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > kMaxAttempts) sampler_exhausted("distinct edge set");
        Edge e = random_subset(rng, u, bounded(rng, 1, n));
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

} // namespace crossfam
