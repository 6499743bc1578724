#pragma once

#include <cstdint>

#include "crossfam/family.hpp"
#include "crossfam/solvers.hpp"

namespace crossfam {

/// The 7-point projective plane as a plain hypergraph: lines
/// {i, i+1, i+3} mod 7. 3-uniform, pairwise intersections of size 1.
Family gen_fano();

/// Wrap a plain hypergraph H0 = (V0, E0) into the cross-intersecting
/// family A = E0, B = {V0}. Its chromatic number equals chi(H0).
/// Throws PreconditionError when h0 has a B side or an empty edge set.
Family gen_wrap(const Family& h0);

/// The n x n grid family: vertices v(i,j) = i*n + j, A = the n rows,
/// B = all n^n transversals picking one vertex per row, in lexicographic
/// column order. Critical and cross-intersecting; side B meets the n^n
/// edge bound exactly. Throws std::invalid_argument for n < 2 or when n^n
/// would exceed the edge budget.
Family gen_grid_transversal(int n);

/// The padded n-uniform family on {v_1..v_{2n-1}} plus m extra vertices:
/// every n-subset of the v's joins side A or B according to which witness
/// (n-1)-set it meets, and each extra vertex u_i contributes one padded
/// edge per side containing the opposite witness set. Cross-intersecting
/// with 2m more edges than the m = 0 family, chi = 3, not critical for
/// m >= 1. Throws std::invalid_argument for n < 3 or m < 0.
Family gen_padded(int n, int m);

/// Lift an (n-1)-uniform simple plain hypergraph h0 with chi(h0) >= 3 to
/// the n-uniform family B = {{u_1..u_n}}, A = {e + u_i : e in E0, i <= n}
/// on V0 plus n fresh vertices. Throws PreconditionError when h0 is not
/// plain, not (n-1)-uniform, not simple, or 2-colorable.
Family gen_simple_based(const Family& h0, int n, const SolveOptions& opts = {});

/// c vertex-disjoint relabeled copies (copy t offset by t * |V|).
/// Throws std::invalid_argument for c < 1.
Family gen_disjoint_copies(const Family& h, int c);

/// Iterated blow-up of the 7-point plane: level 1 is the plane itself;
/// level k+1 replaces each of the 7 vertices by a disjoint level-k copy
/// and takes one edge from each of the three copies on every line.
/// Level k is 3^k-uniform with 7^((3^k - 1)/2) edges on 7^k vertices.
/// Throws std::invalid_argument for k < 1 or when the edge count would
/// exceed max_edges.
Family gen_iterated_fano(int k, std::uint64_t max_edges = 1'000'000);

/// Percolation family of the diagonally triangulated grid_k x grid_k grid:
/// A = inclusion-minimal vertex sets of simple paths joining the top side
/// to the bottom side, B = the same for right to left. Boundary sides are
/// the four full boundary rows/columns; adjacent sides share their corner
/// vertex (the crossing property fails for every corner-exclusive split,
/// see README). Throws std::invalid_argument for grid_k < 2 and
/// BudgetExhaustedError past path_cap enumerated paths.
Family gen_triangulation_percolation(int grid_k, std::uint64_t path_cap = 1'000'000);

} // namespace crossfam
