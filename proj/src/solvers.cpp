#include "crossfam/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossfam/errors.hpp"

namespace crossfam {

namespace {

bool monochromatic(const Edge& e, const std::vector<int>& colors) {
    int seen = -2;
    bool mono = true;
    e.for_each([&](int v) {
        int c = colors[static_cast<std::size_t>(v)];
        if (seen == -2)
            seen = c;
        else if (c != seen)
            mono = false;
    });
    return mono; // size <= 1 and empty edges are monochromatic
}

struct ColorSearch {
    const std::vector<Edge>& edges;
    std::vector<std::vector<int>> edge_members;
    std::vector<int> colors; // -1 = uncolored
    int k;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    ColorSearch(const std::vector<Edge>& es, int vertex_count, int k_, std::uint64_t budget_)
        : edges(es), colors(static_cast<std::size_t>(vertex_count), -1), k(k_), budget(budget_) {
        edge_members.reserve(edges.size());
        for (const Edge& e : edges) edge_members.push_back(e.members());
    }

    // 1 = satisfied (two colors present), 0 = open (has an uncolored vertex),
    // -1 = fully colored and monochromatic.
    int edge_status(std::size_t i) const {
        int first = -2;
        bool open = false;
        for (int v : edge_members[i]) {
            int c = colors[static_cast<std::size_t>(v)];
            if (c < 0) {
                open = true;
            } else if (first == -2) {
                first = c;
            } else if (c != first) {
                return 1;
            }
        }
        return open ? 0 : -1;
    }

    bool solve() {
        if (++nodes > budget) throw BudgetExhaustedError("coloring search node budget exhausted");

        int pick = -1;
        int pick_size = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            int st = edge_status(i);
            if (st == -1) return false;
            if (st == 0) {
                int sz = static_cast<int>(edge_members[i].size());
                if (pick < 0 || sz < pick_size) {
                    pick = static_cast<int>(i);
                    pick_size = sz;
                }
            }
        }
        if (pick < 0) return true; // every edge satisfied

        int v = -1;
        for (int cand : edge_members[static_cast<std::size_t>(pick)]) {
            if (colors[static_cast<std::size_t>(cand)] < 0) {
                v = cand;
                break;
            }
        }
        // pick had status 0, so an uncolored vertex exists
        for (int c = 0; c < k; ++c) {
            colors[static_cast<std::size_t>(v)] = c;
            if (solve()) return true;
            colors[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

} // namespace

bool is_proper_coloring(const Family& h, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != h.vertex_count) return false;
    for (int col : c.colors)
        if (col < 0 || col >= c.color_count) return false;
    for (const Edge& e : union_edges(h))
        if (monochromatic(e, c.colors)) return false;
    return true;
}

std::optional<Coloring> k_colorable(const Family& h, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::vector<Edge> all = union_edges(h);
    for (const Edge& e : all)
        if (e.size() <= 1) return std::nullopt; // monochromatic under every coloring

    ColorSearch search(all, h.vertex_count, k, opts.node_budget);
    if (!all.empty()) {
        // Color permutations are interchangeable; pinning one vertex prunes them.
        search.colors[static_cast<std::size_t>(all.front().min_element())] = 0;
    }
    if (!search.solve()) return std::nullopt;

    Coloring c;
    c.colors = std::move(search.colors);
    for (int& col : c.colors)
        if (col < 0) col = 0; // free vertices: every edge is already satisfied
    c.color_count = k;
    c.method = ColoringMethod::Exact;
    return c;
}

ChiCertificate chi(const Family& h, const SolveOptions& opts) {
    for (const Edge& e : union_edges(h)) {
        if (e.empty()) throw PreconditionError("chi is undefined: empty edge present");
        if (e.size() == 1) throw PreconditionError("chi is undefined: size-1 edge present");
    }

    for (int k = 1; k <= std::max(1, h.vertex_count); ++k) {
        if (auto c = k_colorable(h, k, opts)) {
            // A proper coloring with fewer distinct colors would have been
            // found at a smaller k, so exactly k colors appear (when k > 1).
            ChiCertificate cert;
            cert.value = k;
            cert.coloring = std::move(*c);
            cert.lower_bound_certified = true;
            return cert;
        }
    }
    // Unreachable: with all edge sizes >= 2, vertex_count distinct colors are proper.
    throw std::logic_error("chi search failed to terminate");
}

namespace {

struct TauSearch {
    std::vector<Edge> edges; // deduplicated, non-empty
    std::vector<std::vector<int>> edge_members;
    int best;
    Edge best_set;
    Edge chosen;
    int chosen_size = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    explicit TauSearch(std::vector<Edge> es, std::uint64_t budget_)
        : edges(std::move(es)), budget(budget_) {
        edge_members.reserve(edges.size());
        for (const Edge& e : edges) edge_members.push_back(e.members());
        greedy_incumbent();
    }

    void greedy_incumbent() {
        Edge cover;
        int size = 0;
        for (;;) {
            std::vector<std::size_t> uncovered;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (!edges[i].intersects(cover)) uncovered.push_back(i);
            if (uncovered.empty()) break;
            int best_v = -1, best_deg = 0;
            for (std::size_t i : uncovered) {
                for (int v : edge_members[i]) {
                    int deg = 0;
                    for (std::size_t j : uncovered)
                        if (edges[j].contains(v)) ++deg;
                    if (deg > best_deg || (deg == best_deg && (best_v < 0 || v < best_v))) {
                        best_deg = deg;
                        best_v = v;
                    }
                }
            }
            cover.add(best_v);
            ++size;
        }
        best = size;
        best_set = cover;
    }

    // Greedy packing of pairwise-disjoint uncovered edges.
    int lower_bound(const std::vector<std::size_t>& uncovered) const {
        Edge used;
        int count = 0;
        for (std::size_t i : uncovered) {
            if (!edges[i].intersects(used)) {
                used = used | edges[i];
                ++count;
            }
        }
        return count;
    }

    void solve() {
        if (++nodes > budget) throw BudgetExhaustedError("transversal search node budget exhausted");

        std::vector<std::size_t> uncovered;
        int pick = -1, pick_size = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i].intersects(chosen)) {
                uncovered.push_back(i);
                int sz = static_cast<int>(edge_members[i].size());
                if (pick < 0 || sz < pick_size) {
                    pick = static_cast<int>(i);
                    pick_size = sz;
                }
            }
        }
        if (uncovered.empty()) {
            if (chosen_size < best) {
                best = chosen_size;
                best_set = chosen;
            }
            return;
        }
        if (chosen_size + lower_bound(uncovered) >= best) return;

        for (int v : edge_members[static_cast<std::size_t>(pick)]) {
            chosen.add(v);
            ++chosen_size;
            solve();
            chosen.remove(v);
            --chosen_size;
        }
    }
};

} // namespace

TauCertificate tau(const std::vector<Edge>& edges, const SolveOptions& opts) {
    TauCertificate cert;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].empty()) {
            cert.infeasible_edge = static_cast<int>(i);
            return cert; // value stays nullopt: +infinity
        }
    }
    TauSearch search(canonical_edges(edges), opts.node_budget);
    search.solve();
    cert.value = search.best;
    cert.transversal = search.best_set;
    return cert;
}

} // namespace crossfam
