#include "crossfam/flowers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "crossfam/errors.hpp"

namespace crossfam {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

namespace {

// Maximum-degree vertex over the current edges, lowest index on ties.
int max_degree_vertex(const std::vector<Edge>& edges) {
    int best_v = -1, best_deg = 0;
    Edge support;
    for (const Edge& e : edges) support = support | e;
    support.for_each([&](int v) {
        int deg = 0;
        for (const Edge& e : edges)
            if (e.contains(v)) ++deg;
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    });
    return best_v;
}

} // namespace

std::optional<FlowerCertificate> find_flower(const std::vector<Edge>& edges, int k,
                                             const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("petal count must be at least 1");

    std::vector<Edge> current = canonical_edges(edges);
    Edge core;
    for (;;) {
        if (current.empty()) return std::nullopt; // tau = 0 < k, nothing to peel
        TauCertificate t = tau(current, opts);
        if (t.at_least(k)) break;
        // A (k-1)-transversal exists, so the max-degree vertex is in at
        // least |E|/(k-1) edges. Peel it and keep only its link.
        int x = max_degree_vertex(current);
        core.add(x);
        std::vector<Edge> link;
        link.reserve(current.size());
        for (const Edge& e : current)
            if (e.contains(x)) link.push_back(e - Edge::single(x));
        current = canonical_edges(std::move(link));
    }

    // Certify against the full restriction (every edge, not just the peeled
    // chain); it is a superset of the final level, so its tau is no smaller.
    FlowerCertificate cert;
    cert.core = core;
    cert.petals = k;
    cert.tau_witness = tau(restrict_edges(edges, core), opts);
    if (!cert.tau_witness.at_least(k))
        throw std::logic_error("flower certificate failed tau re-verification");
    return cert;
}

Theorem2Report check_theorem2(const Family& h, const SolveOptions& opts) {
    if (!is_cross_intersecting(h))
        throw PreconditionError("check_theorem2 needs a cross-intersecting family");

    Theorem2Report r;
    r.n = max_edge_size(h);
    r.bound = saturating_pow(static_cast<std::uint64_t>(r.n), static_cast<std::uint64_t>(r.n));
    r.a_count = h.side_a.size();
    r.b_count = h.side_b.size();

    r.violation = criticality_violation(h);
    r.critical = !r.violation.has_value();

    std::uint64_t largest = std::max(r.a_count, r.b_count);
    r.bound_holds = largest <= r.bound;
    if (r.critical) {
        // Guaranteed for critical families; a violation here would refute
        // the bound itself, so surface it rather than clamp.
        if (!r.bound_holds)
            throw InternalContradictionError(
                "critical cross-intersecting family with a side larger than n^n");
        r.margin = r.bound - largest;
    }
    if (!r.bound_holds) {
        const std::vector<Edge>& side =
            r.a_count >= r.b_count ? h.side_a : h.side_b;
        r.flower = find_flower(side, r.n + 1, opts);
    }
    return r;
}

} // namespace crossfam
