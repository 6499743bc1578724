#pragma once

#include <optional>
#include <set>

#include "crossfam/family.hpp"

namespace crossfam {

/// Every two edges of A union B share a vertex.
bool is_intersecting(const Family& h);

/// A and B are non-empty and every A-edge meets every B-edge.
bool is_cross_intersecting(const Family& h);

/// No edge of A union B strictly contains another.
bool is_sperner(const Family& h);

/// A witness that a family is not critical: the edge on `side` ('a' or 'b')
/// at `edge_index` contains `vertex`, yet no edge of the opposite side meets
/// it in exactly {vertex}.
struct CriticalityViolation {
    char side = 'a';
    int edge_index = 0;
    int vertex = 0;
};

/// First violation in canonical scan order, or nullopt when the family is
/// critical. Families that are not cross-intersecting report the first
/// failing criticality pair as well (every such family has one).
/// Throws PreconditionError when a side is empty.
std::optional<CriticalityViolation> criticality_violation(const Family& h);

/// Critical cross-intersecting family: cross-intersecting, and for every
/// edge and every vertex in it the opposite side has an edge meeting it in
/// exactly that vertex. Throws PreconditionError when a side is empty.
bool is_critical(const Family& h);

/// Q(H): sizes |e1 ∩ e2| over unordered pairs of distinct edges of
/// A union B. Throws PreconditionError with fewer than 2 distinct edges.
std::set<int> q_set(const Family& h);

/// The rigid two-big-edges structure: one side is {P, U} with |P| = m >= 2,
/// |U| = l >= 2 partitioning the whole vertex set, and the other side is
/// exactly the m*l cross pairs {p, u}. big_side tells which side holds the
/// two big edges.
struct ExceptionalStructure {
    int m = 0;
    int l = 0;
    Edge part_m;
    Edge part_u;
    char big_side = 'a';
};

/// Recognize the structure above in either side orientation. The candidate
/// bipartition is forced by the two edges of the big side; no general
/// isomorphism search is involved.
std::optional<ExceptionalStructure> exceptional_structure(const Family& h);

/// Everything decidable about a family in one scan.
struct AnalysisReport {
    bool is_intersecting = false;
    bool is_cross_intersecting = false;
    bool is_sperner = false;
    std::optional<int> uniform;       // n when all edges have size n
    bool is_critical = false;         // false when a side is empty
    std::set<int> q_set;              // empty when fewer than 2 distinct edges
    int max_edge_size = 0;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    bool exceptional = false;
};

AnalysisReport analyze(const Family& h);

} // namespace crossfam
