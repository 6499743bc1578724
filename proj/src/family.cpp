#include "crossfam/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossfam {

std::string to_string(ColoringMethod m) {
    switch (m) {
        case ColoringMethod::Exact: return "exact";
        case ColoringMethod::Proposition4: return "proposition4";
        case ColoringMethod::Theorem3: return "theorem3";
        case ColoringMethod::Exceptional: return "exceptional";
    }
    return "?";
}

std::vector<Edge> canonical_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge& x, const Edge& y) { return VertexSet::compare(x, y) < 0; });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

static void check_edges(int vertex_count, const std::vector<Edge>& edges, const char* side) {
    for (const Edge& e : edges) {
        if (e.max_element() >= vertex_count)
            throw std::invalid_argument(std::string("edge index out of range in side ") + side);
    }
}

Family make_family_edges(int vertex_count, std::vector<Edge> a, std::vector<Edge> b,
                         std::optional<std::vector<std::string>> labels) {
    if (vertex_count < 0) throw std::invalid_argument("vertex_count is negative");
    if (labels && static_cast<int>(labels->size()) != vertex_count)
        throw std::invalid_argument("label count does not match vertex_count");
    check_edges(vertex_count, a, "a");
    check_edges(vertex_count, b, "b");
    Family f;
    f.vertex_count = vertex_count;
    f.side_a = canonical_edges(std::move(a));
    f.side_b = canonical_edges(std::move(b));
    f.labels = std::move(labels);
    return f;
}

Family make_family(int vertex_count, const std::vector<std::vector<int>>& a,
                   const std::vector<std::vector<int>>& b,
                   std::optional<std::vector<std::string>> labels) {
    auto build = [](const std::vector<std::vector<int>>& raw) {
        std::vector<Edge> out;
        out.reserve(raw.size());
        for (const auto& vs : raw) out.push_back(Edge::from(vs));
        return out;
    };
    return make_family_edges(vertex_count, build(a), build(b), std::move(labels));
}

Restriction restrict(const Family& h, const Edge& w) {
    if (w.max_element() >= h.vertex_count)
        throw std::invalid_argument("restriction set contains an out-of-range vertex");

    Restriction r;
    r.old_to_new.assign(static_cast<std::size_t>(h.vertex_count), -1);
    for (int v = 0; v < h.vertex_count; ++v) {
        if (!w.contains(v)) {
            r.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(r.new_to_old.size());
            r.new_to_old.push_back(v);
        }
    }

    auto image = [&](const std::vector<Edge>& edges) {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (const Edge& e : edges) {
            Edge img;
            e.for_each([&](int v) {
                int nv = r.old_to_new[static_cast<std::size_t>(v)];
                if (nv >= 0) img.add(nv);
            });
            out.push_back(std::move(img));
        }
        return out;
    };

    std::optional<std::vector<std::string>> labels;
    if (h.labels) {
        labels.emplace();
        labels->reserve(r.new_to_old.size());
        for (int old : r.new_to_old) labels->push_back((*h.labels)[static_cast<std::size_t>(old)]);
    }

    r.family = make_family_edges(static_cast<int>(r.new_to_old.size()),
                                 image(h.side_a), image(h.side_b), std::move(labels));
    return r;
}

std::vector<Edge> restrict_edges(const std::vector<Edge>& edges, const Edge& w) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(e - w);
    return canonical_edges(std::move(out));
}

std::vector<Edge> union_edges(const Family& h) {
    std::vector<Edge> all = h.side_a;
    all.insert(all.end(), h.side_b.begin(), h.side_b.end());
    return canonical_edges(std::move(all));
}

Family union_sides(const Family& h) {
    return make_family_edges(h.vertex_count, union_edges(h), {}, h.labels);
}

int max_edge_size(const Family& h) {
    int n = 0;
    for (const Edge& e : h.side_a) n = std::max(n, e.size());
    for (const Edge& e : h.side_b) n = std::max(n, e.size());
    return n;
}

} // namespace crossfam
