#pragma once

#include "crossfam/family.hpp"
#include "crossfam/solvers.hpp"

namespace crossfam {

/// Four-color construction for a cross-intersecting family with
/// inclusion-minimal edges a in A and b in B (lexicographically first on
/// each side): color a∩b, a\b, b\a and the rest with colors 0..3.
/// The result is re-verified before return; an improper outcome (which the
/// degenerate case a = b produces) throws VerificationFailedError, and the
/// caller should fall back to the exact solver.
Coloring proposition_four_coloring(const Family& h);

/// Three-color construction for a Sperner cross-intersecting family whose
/// edges all have size >= 3: take the pair (a, b) in A x B minimizing
/// |a ∪ b| (ties lexicographic), pick the lowest-index v_a in a\b and
/// v_b in b\a, and color {v_a, v_b} / the rest of a ∪ b / everything else
/// with colors 0, 1, 2. Re-verified; an improper outcome aborts loudly
/// with VerificationFailedError since the construction is guaranteed.
Coloring theorem_three_coloring(const Family& h);

enum class CrossColoringVerdict { ChiLe3, ExceptionalChi4 };

std::string to_string(CrossColoringVerdict v);

struct CrossColoringResult {
    Coloring coloring;
    CrossColoringVerdict verdict;
};

/// Dispatcher for Sperner cross-intersecting families: the exceptional
/// two-big-edges structure gets an optimal 4-coloring, families with all
/// edge sizes >= 3 get the three-color construction, and the rest go
/// through the exact 3-colorability search, which is guaranteed to succeed
/// for non-exceptional inputs. If that guarantee ever fails,
/// InternalContradictionError surfaces it; it is never swallowed.
CrossColoringResult color_cross_family(const Family& h, const SolveOptions& opts = {});

} // namespace crossfam
