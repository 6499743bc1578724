#include "crossfam/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crossfam/errors.hpp"
#include "crossfam/flowers.hpp"

namespace crossfam {

namespace {

void require_plain(const Family& h, const char* who) {
    if (!h.side_b.empty())
        throw PreconditionError(std::string(who) + " needs a plain hypergraph (empty side b)");
}

Edge offset_edge(const Edge& e, int delta) {
    Edge out;
    e.for_each([&](int v) { out.add(v + delta); });
    return out;
}

// All s-subsets of {0..u-1} as edges, in combination order.
void subsets_of_size(int u, int s, std::vector<Edge>& out) {
    std::vector<int> pick(static_cast<std::size_t>(s));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == s) {
            out.push_back(Edge::from(pick));
            return;
        }
        for (int v = start; v <= u - (s - depth); ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

Family gen_fano() {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 7; ++i)
        lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return make_family(7, lines, {});
}

Family gen_wrap(const Family& h0) {
    require_plain(h0, "gen_wrap");
    if (h0.side_a.empty())
        throw PreconditionError("gen_wrap needs a non-empty edge set");
    return make_family_edges(h0.vertex_count, h0.side_a, {Edge::full(h0.vertex_count)},
                             h0.labels);
}

Family gen_grid_transversal(int n) {
    if (n < 2) throw std::invalid_argument("grid family needs n >= 2");
    if (n > 7) throw std::invalid_argument("grid family edge count n^n exceeds the budget");

    std::vector<Edge> rows;
    for (int i = 0; i < n; ++i) {
        Edge row;
        for (int j = 0; j < n; ++j) row.add(i * n + j);
        rows.push_back(row);
    }

    std::vector<Edge> transversals;
    std::vector<int> cols(static_cast<std::size_t>(n), 0);
    for (;;) {
        Edge t;
        for (int i = 0; i < n; ++i) t.add(i * n + cols[static_cast<std::size_t>(i)]);
        transversals.push_back(t);
        int i = n - 1;
        while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - 1) {
            cols[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cols[static_cast<std::size_t>(i)];
    }
    return make_family_edges(n * n, std::move(rows), std::move(transversals));
}

Family gen_padded(int n, int m) {
    if (n < 3) throw std::invalid_argument("padded family needs n >= 3");
    if (m < 0) throw std::invalid_argument("padded family needs m >= 0");

    int base = 2 * n - 1;
    Edge witness_a; // v_1 .. v_{n-1}
    for (int v = 0; v <= n - 2; ++v) witness_a.add(v);
    Edge witness_b; // v_1, v_n .. v_{2n-3}
    witness_b.add(0);
    for (int v = n - 1; v <= 2 * n - 4; ++v) witness_b.add(v);

    std::vector<Edge> nsets;
    subsets_of_size(base, n, nsets);

    std::vector<Edge> a, b;
    for (const Edge& e : nsets) {
        if (e.intersects(witness_a)) a.push_back(e);
        if (e.intersects(witness_b)) b.push_back(e);
    }
    // The padded edge on each side carries the witness set the opposite
    // side's n-subsets are guaranteed to meet.
    for (int i = 0; i < m; ++i) {
        int u = base + i;
        a.push_back(witness_b | Edge::single(u));
        b.push_back(witness_a | Edge::single(u));
    }
    return make_family_edges(base + m, std::move(a), std::move(b));
}

Family gen_simple_based(const Family& h0, int n, const SolveOptions& opts) {
    require_plain(h0, "gen_simple_based");
    if (n < 2) throw std::invalid_argument("gen_simple_based needs n >= 2");
    if (h0.side_a.empty())
        throw PreconditionError("gen_simple_based needs a non-empty edge set");
    for (const Edge& e : h0.side_a)
        if (e.size() != n - 1)
            throw PreconditionError("gen_simple_based needs an (n-1)-uniform base");
    for (std::size_t i = 0; i < h0.side_a.size(); ++i)
        for (std::size_t j = i + 1; j < h0.side_a.size(); ++j)
            if (h0.side_a[i].intersection_size(h0.side_a[j]) > 1)
                throw PreconditionError("gen_simple_based needs a simple base "
                                        "(pairwise intersections of size <= 1)");
    if (k_colorable(h0, 2, opts))
        throw PreconditionError("gen_simple_based needs a base that is not 2-colorable");

    int v0 = h0.vertex_count;
    Edge hub;
    for (int i = 0; i < n; ++i) hub.add(v0 + i);

    std::vector<Edge> a;
    a.reserve(h0.side_a.size() * static_cast<std::size_t>(n));
    for (const Edge& e : h0.side_a)
        for (int i = 0; i < n; ++i) a.push_back(e | Edge::single(v0 + i));
    return make_family_edges(v0 + n, std::move(a), {hub});
}

Family gen_disjoint_copies(const Family& h, int c) {
    if (c < 1) throw std::invalid_argument("copy count must be at least 1");
    std::vector<Edge> a, b;
    for (int t = 0; t < c; ++t) {
        int delta = t * h.vertex_count;
        for (const Edge& e : h.side_a) a.push_back(offset_edge(e, delta));
        for (const Edge& e : h.side_b) b.push_back(offset_edge(e, delta));
    }
    return make_family_edges(h.vertex_count * c, std::move(a), std::move(b));
}

Family gen_iterated_fano(int k, std::uint64_t max_edges) {
    if (k < 1) throw std::invalid_argument("iteration depth must be at least 1");

    // Edge counts grow as E(k+1) = 7 E(k)^3; refuse before materializing.
    std::uint64_t count = 7;
    for (int level = 2; level <= k; ++level) {
        std::uint64_t cube = saturating_pow(count, 3);
        count = cube > max_edges ? cube : 7 * cube;
        if (count > max_edges)
            throw std::invalid_argument("iterated construction exceeds the edge budget");
    }

    Family plane = gen_fano();
    std::vector<Edge> current = plane.side_a;
    int vertices = 7;
    for (int level = 2; level <= k; ++level) {
        std::vector<Edge> next;
        for (const Edge& line : plane.side_a) {
            std::vector<int> pts = line.members();
            for (const Edge& e0 : current) {
                Edge part0 = offset_edge(e0, pts[0] * vertices);
                for (const Edge& e1 : current) {
                    Edge part01 = part0 | offset_edge(e1, pts[1] * vertices);
                    for (const Edge& e2 : current)
                        next.push_back(part01 | offset_edge(e2, pts[2] * vertices));
                }
            }
        }
        current = std::move(next);
        vertices *= 7;
    }
    return make_family_edges(vertices, std::move(current), {});
}

namespace {

struct GridTriangulation {
    int k;
    std::vector<std::vector<int>> adj;

    explicit GridTriangulation(int k_) : k(k_), adj(static_cast<std::size_t>(k_ * k_)) {
        auto idx = [&](int r, int c) { return r * k + c; };
        auto link = [&](int u, int v) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        };
        for (int r = 0; r < k; ++r)
            for (int c = 0; c + 1 < k; ++c) link(idx(r, c), idx(r, c + 1));
        for (int c = 0; c < k; ++c)
            for (int r = 0; r + 1 < k; ++r) link(idx(r, c), idx(r + 1, c));
        for (int r = 0; r + 1 < k; ++r)
            for (int c = 0; c + 1 < k; ++c) link(idx(r, c), idx(r + 1, c + 1));
        for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    }
};

struct PathEnumerator {
    const GridTriangulation& g;
    Edge targets;
    std::uint64_t cap;
    std::uint64_t found = 0;
    std::set<Edge> sets;

    void dfs(int v, Edge& visited) {
        if (targets.contains(v)) {
            if (++found > cap)
                throw BudgetExhaustedError("path enumeration exceeded the configured cap");
            sets.insert(visited);
        }
        for (int w : g.adj[static_cast<std::size_t>(v)]) {
            if (!visited.contains(w)) {
                visited.add(w);
                dfs(w, visited);
                visited.remove(w);
            }
        }
    }

    std::vector<Edge> run(const Edge& sources) {
        sources.for_each([&](int s) {
            Edge visited = Edge::single(s);
            dfs(s, visited);
        });
        return {sets.begin(), sets.end()};
    }
};

std::vector<Edge> minimal_sets(std::vector<Edge> sets) {
    std::stable_sort(sets.begin(), sets.end(),
                     [](const Edge& x, const Edge& y) { return x.size() < y.size(); });
    std::vector<Edge> keep;
    for (const Edge& s : sets) {
        bool dominated = false;
        for (const Edge& t : keep) {
            if (t.is_strict_subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(s);
    }
    return keep;
}

} // namespace

Family gen_triangulation_percolation(int grid_k, std::uint64_t path_cap) {
    if (grid_k < 2) throw std::invalid_argument("triangulated grid needs grid_k >= 2");

    GridTriangulation g(grid_k);
    auto idx = [&](int r, int c) { return r * grid_k + c; };
    Edge top, bottom, left, right;
    for (int c = 0; c < grid_k; ++c) {
        top.add(idx(0, c));
        bottom.add(idx(grid_k - 1, c));
    }
    for (int r = 0; r < grid_k; ++r) {
        left.add(idx(r, 0));
        right.add(idx(r, grid_k - 1));
    }

    PathEnumerator vertical{g, bottom, path_cap, 0, {}};
    PathEnumerator horizontal{g, left, path_cap, 0, {}};
    std::vector<Edge> a = minimal_sets(vertical.run(top));
    std::vector<Edge> b = minimal_sets(horizontal.run(right));
    return make_family_edges(grid_k * grid_k, std::move(a), std::move(b));
}

} // namespace crossfam
