#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossfam/vertex_set.hpp"

namespace crossfam {

/// An edge is a set of vertex indices. Empty edges are representable; they
/// only arise from restriction and are detectable via Edge::empty().
using Edge = VertexSet;

/// A side-tagged set family H = (V, A, B) over the dense vertex universe
/// [0, vertex_count). side_b empty models a plain hypergraph H = (V, E).
/// Canonical form (established by make_family and kept by every operation
/// in this library): each side is sorted in the canonical edge order and
/// holds no duplicate edges. The same edge may appear in both sides.
/// Labels are display metadata only, never identity.
struct Family {
    int vertex_count = 0;
    std::vector<Edge> side_a;
    std::vector<Edge> side_b;
    std::optional<std::vector<std::string>> labels;

    bool operator==(const Family&) const = default;
};

/// How a Coloring was obtained.
enum class ColoringMethod { Exact, Proposition4, Theorem3, Exceptional };

std::string to_string(ColoringMethod m);

/// Total assignment vertex index -> color index in [0, color_count).
struct Coloring {
    std::vector<int> colors;
    int color_count = 0;
    ColoringMethod method = ColoringMethod::Exact;

    bool operator==(const Coloring&) const = default;
};

/// Sort edges canonically and drop duplicates.
std::vector<Edge> canonical_edges(std::vector<Edge> edges);

/// Canonical family from raw vertex lists. Throws std::invalid_argument on
/// negative vertex_count, out-of-range indices, or label count mismatch.
Family make_family(int vertex_count,
                   const std::vector<std::vector<int>>& a,
                   const std::vector<std::vector<int>>& b,
                   std::optional<std::vector<std::string>> labels = std::nullopt);

/// Same, from already-built edges.
Family make_family_edges(int vertex_count,
                         std::vector<Edge> a,
                         std::vector<Edge> b,
                         std::optional<std::vector<std::string>> labels = std::nullopt);

/// Result of deleting a vertex set: the family on V \ W with every edge
/// replaced by its image e \ W, vertices reindexed densely. Edges that
/// become empty are kept. new_to_old[i] is the original index of new
/// vertex i; old_to_new[v] is the new index of v, or -1 if v was deleted.
struct Restriction {
    Family family;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new;
};

/// H_W: delete W from every edge of both sides. Throws std::invalid_argument
/// if W contains an out-of-range index.
Restriction restrict(const Family& h, const Edge& w);

/// Edge-list counterpart used by the flower machinery: the image
/// {e \ W : e in edges}, duplicates collapsed, empty images kept,
/// original vertex indexing preserved.
std::vector<Edge> restrict_edges(const std::vector<Edge>& edges, const Edge& w);

/// (V, A union B) as a plain hypergraph.
Family union_sides(const Family& h);

/// Deduplicated A union B in canonical order.
std::vector<Edge> union_edges(const Family& h);

/// max |e| over A union B; 0 for an edgeless family.
int max_edge_size(const Family& h);

} // namespace crossfam
