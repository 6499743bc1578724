#include "crossfam/predicates.hpp"

#include <algorithm>

#include "crossfam/errors.hpp"

namespace crossfam {

bool is_intersecting(const Family& h) {
    std::vector<Edge> all = union_edges(h);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!all[i].intersects(all[j])) return false;
    return true;
}

bool is_cross_intersecting(const Family& h) {
    if (h.side_a.empty() || h.side_b.empty()) return false;
    for (const Edge& a : h.side_a)
        for (const Edge& b : h.side_b)
            if (!a.intersects(b)) return false;
    return true;
}

bool is_sperner(const Family& h) {
    std::vector<Edge> all = union_edges(h);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (i != j && all[i].is_strict_subset_of(all[j])) return false;
    return true;
}

// a ∩ b == {v}?
static bool meets_exactly_at(const Edge& a, const Edge& b, int v) {
    return (a & b) == Edge::single(v);
}

static std::optional<CriticalityViolation>
side_violation(const std::vector<Edge>& own, const std::vector<Edge>& other, char side) {
    for (std::size_t i = 0; i < own.size(); ++i) {
        std::optional<CriticalityViolation> found;
        own[i].for_each([&](int v) {
            if (found) return;
            bool witnessed = false;
            for (const Edge& o : other) {
                if (meets_exactly_at(own[i], o, v)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) found = CriticalityViolation{side, static_cast<int>(i), v};
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<CriticalityViolation> criticality_violation(const Family& h) {
    if (h.side_a.empty() || h.side_b.empty())
        throw PreconditionError("criticality is defined only for non-empty sides");
    if (auto v = side_violation(h.side_a, h.side_b, 'a')) return v;
    return side_violation(h.side_b, h.side_a, 'b');
}

bool is_critical(const Family& h) {
    if (h.side_a.empty() || h.side_b.empty())
        throw PreconditionError("criticality is defined only for non-empty sides");
    return is_cross_intersecting(h) && !criticality_violation(h).has_value();
}

std::set<int> q_set(const Family& h) {
    std::vector<Edge> all = union_edges(h);
    if (all.size() < 2)
        throw PreconditionError("Q(H) needs at least 2 distinct edges");
    std::set<int> q;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            q.insert(all[i].intersection_size(all[j]));
    return q;
}

static std::optional<ExceptionalStructure>
match_orientation(const Family& h, const std::vector<Edge>& big,
                  const std::vector<Edge>& cross, char big_side) {
    if (big.size() != 2) return std::nullopt;
    const Edge& p = big[0];
    const Edge& u = big[1];
    int m = p.size(), l = u.size();
    if (m < 2 || l < 2) return std::nullopt;
    if (p.intersects(u)) return std::nullopt;
    if (m + l != h.vertex_count) return std::nullopt;

    std::vector<Edge> expected;
    expected.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(l));
    p.for_each([&](int pv) {
        u.for_each([&](int uv) { expected.push_back(Edge{pv, uv}); });
    });
    if (canonical_edges(std::move(expected)) != cross) return std::nullopt;
    return ExceptionalStructure{m, l, p, u, big_side};
}

std::optional<ExceptionalStructure> exceptional_structure(const Family& h) {
    if (auto s = match_orientation(h, h.side_a, h.side_b, 'a')) return s;
    return match_orientation(h, h.side_b, h.side_a, 'b');
}

AnalysisReport analyze(const Family& h) {
    AnalysisReport r;
    r.is_intersecting = is_intersecting(h);
    r.is_cross_intersecting = is_cross_intersecting(h);
    r.is_sperner = is_sperner(h);
    r.max_edge_size = max_edge_size(h);
    r.a_count = h.side_a.size();
    r.b_count = h.side_b.size();

    std::vector<Edge> all = union_edges(h);
    if (!all.empty()) {
        bool uniform = std::all_of(all.begin(), all.end(), [&](const Edge& e) {
            return e.size() == r.max_edge_size;
        });
        if (uniform) r.uniform = r.max_edge_size;
    }
    if (all.size() >= 2) r.q_set = q_set(h);
    if (!h.side_a.empty() && !h.side_b.empty()) r.is_critical = is_critical(h);
    r.exceptional = exceptional_structure(h).has_value();
    return r;
}

} // namespace crossfam
