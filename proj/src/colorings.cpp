#include "crossfam/colorings.hpp"

#include <algorithm>

#include "crossfam/errors.hpp"
#include "crossfam/predicates.hpp"

namespace crossfam {

std::string to_string(CrossColoringVerdict v) {
    return v == CrossColoringVerdict::ChiLe3 ? "chi_le_3" : "exceptional_chi_4";
}

namespace {

bool is_minimal_in(const Edge& e, const std::vector<Edge>& all) {
    for (const Edge& f : all)
        if (f.is_strict_subset_of(e)) return false;
    return true;
}

// Lexicographically first edge of `side` with no strict subedge in A ∪ B.
const Edge* first_minimal(const std::vector<Edge>& side, const std::vector<Edge>& all) {
    for (const Edge& e : side)
        if (is_minimal_in(e, all)) return &e;
    return nullptr;
}

// First pair (a, b) in A x B scan order minimizing |a ∪ b|.
std::pair<const Edge*, const Edge*> minimizing_pair(const Family& h) {
    const Edge* best_a = nullptr;
    const Edge* best_b = nullptr;
    int best_union = 0;
    for (const Edge& a : h.side_a) {
        for (const Edge& b : h.side_b) {
            int u = (a | b).size();
            if (!best_a || u < best_union) {
                best_a = &a;
                best_b = &b;
                best_union = u;
            }
        }
    }
    return {best_a, best_b};
}

Coloring assign_classes(int vertex_count, const std::vector<Edge>& classes,
                        ColoringMethod method) {
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(vertex_count), -1);
    int used = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty()) continue;
        classes[i].for_each([&](int v) { c.colors[static_cast<std::size_t>(v)] = used; });
        ++used;
    }
    c.color_count = used;
    c.method = method;
    return c;
}

} // namespace

Coloring proposition_four_coloring(const Family& h) {
    if (!is_cross_intersecting(h))
        throw PreconditionError("proposition_four_coloring needs a cross-intersecting family");

    std::vector<Edge> all = union_edges(h);
    const Edge* a = first_minimal(h.side_a, all);
    const Edge* b = first_minimal(h.side_b, all);
    if (!a || !b)
        throw PreconditionError("proposition_four_coloring: a side has no inclusion-minimal edge");

    Edge rest = Edge::full(h.vertex_count) - (*a | *b);
    Coloring c = assign_classes(h.vertex_count, {*a & *b, *a - *b, *b - *a, rest},
                                ColoringMethod::Proposition4);
    if (!is_proper_coloring(h, c))
        throw VerificationFailedError(
            "proposition_four_coloring produced an improper coloring (degenerate minimal "
            "pair); fall back to the exact solver");
    return c;
}

Coloring theorem_three_coloring(const Family& h) {
    if (!is_cross_intersecting(h))
        throw PreconditionError("theorem_three_coloring needs a cross-intersecting family");
    if (!is_sperner(h))
        throw PreconditionError("theorem_three_coloring needs a Sperner edge set");
    for (const Edge& e : union_edges(h))
        if (e.size() <= 2)
            throw PreconditionError("theorem_three_coloring needs every edge size >= 3");

    auto [best_a, best_b] = minimizing_pair(h);
    if (*best_a == *best_b)
        throw PreconditionError("theorem_three_coloring: the minimizing pair is degenerate "
                                "(the same edge on both sides)");

    int va = (*best_a - *best_b).min_element();
    int vb = (*best_b - *best_a).min_element();
    Edge pair_class{va, vb};
    Edge joined = *best_a | *best_b;
    Coloring c = assign_classes(
        h.vertex_count,
        {pair_class, joined - pair_class, Edge::full(h.vertex_count) - joined},
        ColoringMethod::Theorem3);
    if (!is_proper_coloring(h, c))
        throw VerificationFailedError(
            "theorem_three_coloring produced an improper coloring; the construction is "
            "guaranteed for this input class, so this is a bug");
    return c;
}

CrossColoringResult color_cross_family(const Family& h, const SolveOptions& opts) {
    if (!is_cross_intersecting(h))
        throw PreconditionError("color_cross_family needs a cross-intersecting family");
    if (!is_sperner(h))
        throw PreconditionError("color_cross_family needs a Sperner edge set");

    int min_size = h.vertex_count + 1;
    for (const Edge& e : union_edges(h)) min_size = std::min(min_size, e.size());
    if (min_size <= 1)
        throw PreconditionError("color_cross_family: edges of size <= 1 are out of contract");

    if (auto exc = exceptional_structure(h)) {
        // Split each big edge into its first vertex and the rest: edges of
        // the cross side straddle the two parts, the big edges straddle the
        // split. Four colors, and four are necessary for this structure.
        Edge p1 = Edge::single(exc->part_m.min_element());
        Edge u1 = Edge::single(exc->part_u.min_element());
        Coloring c = assign_classes(
            h.vertex_count,
            {p1, exc->part_m - p1, u1, exc->part_u - u1}, ColoringMethod::Exceptional);
        if (!is_proper_coloring(h, c))
            throw std::logic_error("exceptional 4-coloring is improper");
        return {std::move(c), CrossColoringVerdict::ExceptionalChi4};
    }

    if (min_size >= 3) {
        // The pair construction needs a minimizing pair with a != b. An edge
        // shared by both sides can defeat that even for Sperner input; those
        // families still have chi <= 3, so they fall through to the exact
        // search instead.
        auto [a, b] = minimizing_pair(h);
        if (!(*a == *b)) return {theorem_three_coloring(h), CrossColoringVerdict::ChiLe3};
    }

    auto c = k_colorable(h, 3, opts);
    if (!c)
        throw InternalContradictionError(
            "no 3-coloring exists for a non-exceptional Sperner cross-intersecting family; "
            "this refutes the guaranteed chi <= 3 bound");
    if (!is_proper_coloring(h, *c))
        throw std::logic_error("exact 3-coloring is improper");
    return {std::move(*c), CrossColoringVerdict::ChiLe3};
}

} // namespace crossfam
