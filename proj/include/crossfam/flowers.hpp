#pragma once

#include <cstdint>
#include <optional>

#include "crossfam/family.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/solvers.hpp"

namespace crossfam {

/// A flower with `petals` petals and core `core`: deleting the core from
/// every edge leaves an edge set with covering number >= petals.
/// tau_witness is the exact covering-number certificate of that restricted
/// edge set, re-checkable independently.
struct FlowerCertificate {
    Edge core;
    int petals = 0;
    TauCertificate tau_witness;
};

/// Find a flower with k petals by the peeling recursion: if tau of the
/// current edge set is already >= k the core is complete; otherwise a
/// (k-1)-transversal exists, so some vertex x lies in at least |E|/(k-1)
/// edges — take the maximum-degree vertex (lowest index on ties), recurse
/// on its link {e \ {x} : x in e}, and add x to the core. Guaranteed to
/// succeed when |E| > (k-1)^n for n = max edge size; returns nullopt only
/// when the edge list is empty. The certificate is re-verified against the
/// full restriction by the exact tau solver before return.
/// Throws std::invalid_argument for k < 1.
std::optional<FlowerCertificate> find_flower(const std::vector<Edge>& edges, int k,
                                             const SolveOptions& opts = {});

/// n^n with saturation at the top of the uint64 range.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Edge-bound report for a cross-intersecting family: n = max edge size,
/// the bound n^n, criticality, and the slack max(|A|,|B|) <= n^n when
/// critical. When a side exceeds the bound, the implied flower with n+1
/// petals on that side and the criticality violation it forces are included.
struct Theorem2Report {
    int n = 0;
    std::uint64_t bound = 0;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    bool critical = false;
    bool bound_holds = true;                       // max(|A|,|B|) <= n^n
    std::optional<std::uint64_t> margin;           // bound - max(|A|,|B|), when critical
    std::optional<FlowerCertificate> flower;       // when a side exceeds the bound
    std::optional<CriticalityViolation> violation; // when not critical
};

/// Throws PreconditionError when h is not cross-intersecting.
Theorem2Report check_theorem2(const Family& h, const SolveOptions& opts = {});

} // namespace crossfam
