#pragma once

#include <cstdint>
#include <optional>

#include "crossfam/family.hpp"

namespace crossfam {

/// Search caps shared by the exact solvers. A solver that would exceed
/// node_budget search nodes throws BudgetExhaustedError instead of running
/// unboundedly.
struct SolveOptions {
    std::uint64_t node_budget = 50'000'000;
};

/// No edge of A union B is monochromatic under c (edges of size <= 1 count
/// as monochromatic, so they are never properly colorable).
bool is_proper_coloring(const Family& h, const Coloring& c);

/// Exact k-colorability of A union B by deterministic backtracking:
/// branch on the lowest-index uncolored vertex of the smallest unsatisfied
/// edge, colors tried in ascending order; the first vertex of the first
/// edge is pinned to color 0. Returns a proper coloring or nullopt. The
/// returned color_count is the bound k, not necessarily the number of
/// distinct colors used (chi() tightens it). Throws std::invalid_argument
/// for k < 1.
std::optional<Coloring> k_colorable(const Family& h, int k, const SolveOptions& opts = {});

/// Exact chromatic number with both certificate halves: a proper coloring
/// with `value` colors, and the recorded exhaustion of the (value-1) search.
struct ChiCertificate {
    int value = 0;
    Coloring coloring;
    /// True when the (value-1)-colorability search ran to exhaustion and
    /// returned unsatisfiable (vacuously true for value <= 1).
    bool lower_bound_certified = false;
};

/// Minimal k admitting a proper coloring, found by ascending k = 1, 2, ...
/// Throws PreconditionError when some edge has size <= 1 (no proper
/// coloring exists for any k). An edgeless family has chi = 1.
ChiCertificate chi(const Family& h, const SolveOptions& opts = {});

/// Exact covering number certificate. value is nullopt when the edge set
/// contains an empty edge (tau = +infinity); infeasible_edge then holds the
/// index of the first such edge in the input list.
struct TauCertificate {
    std::optional<int> value;
    Edge transversal;
    std::optional<int> infeasible_edge;

    bool infinite() const { return !value.has_value(); }
    /// tau >= k, treating +infinity as larger than everything.
    bool at_least(int k) const { return infinite() || *value >= k; }
};

/// Exact minimum transversal by branch and bound: branch over the vertices
/// of the smallest uncovered edge, with a greedy max-degree incumbent and a
/// disjoint-edge packing lower bound. Deterministic.
TauCertificate tau(const std::vector<Edge>& edges, const SolveOptions& opts = {});

} // namespace crossfam
