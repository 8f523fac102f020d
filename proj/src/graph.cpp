#include "critgrp/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "critgrp/exact_linalg.hpp"

namespace critgrp {

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (const auto& e : edges) add_edge(e.u, e.v);
}

void Multigraph::add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) {
        throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) {
        throw PreconditionError("self-loops are not allowed");
    }
    edges_.push_back({u, v});
}

std::size_t Multigraph::degree(Vertex v) const {
    if (v >= n_) throw PreconditionError("vertex out of range");
    std::size_t d = 0;
    for (const auto& e : edges_) {
        if (e.u == v || e.v == v) ++d;
    }
    return d;
}

std::vector<std::size_t> Multigraph::degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::size_t Multigraph::max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<std::size_t>> Multigraph::multiplicities() const {
    std::vector<std::vector<std::size_t>> m(n_, std::vector<std::size_t>(n_, 0));
    for (const auto& e : edges_) {
        ++m[e.u][e.v];
        ++m[e.v][e.u];
    }
    return m;
}

Orientation Orientation::standard(const Multigraph& g) {
    Orientation o;
    for (const auto& e : g.edges()) {
        o.tail.push_back(std::min(e.u, e.v));
        o.head.push_back(std::max(e.u, e.v));
    }
    return o;
}

Orientation Orientation::as_listed(const Multigraph& g) {
    Orientation o;
    for (const auto& e : g.edges()) {
        o.tail.push_back(e.u);
        o.head.push_back(e.v);
    }
    return o;
}

bool Orientation::matches(const Multigraph& g) const {
    if (tail.size() != g.edge_count() || head.size() != g.edge_count()) return false;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        const bool same = tail[i] == e.u && head[i] == e.v;
        const bool flipped = tail[i] == e.v && head[i] == e.u;
        if (!same && !flipped) return false;
    }
    return true;
}

void Orientation::reverse(std::size_t edge) {
    std::swap(tail.at(edge), head.at(edge));
}

IntegerMatrix incidence_matrix(const Multigraph& g, const Orientation& o) {
    if (!o.matches(g)) {
        throw PreconditionError("orientation does not match the graph's edges");
    }
    IntegerMatrix d(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        d(o.head[e], e) = 1;
        d(o.tail[e], e) = -1;
    }
    return d;
}

IntegerMatrix laplacian(const Multigraph& g) {
    IntegerMatrix l(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) {
        l(e.u, e.u) += 1;
        l(e.v, e.v) += 1;
        l(e.u, e.v) -= 1;
        l(e.v, e.u) -= 1;
    }
    return l;
}

IntegerMatrix reduced_laplacian(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw PreconditionError("graph has no vertices");
    std::vector<std::size_t> keep(n - 1);
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    IntegerMatrix l = laplacian(g);
    return l.select_rows(keep).select_columns(keep);
}

namespace {

// Connectivity of g with vertex `skip` deleted (skip == n means none).
bool connected_without(const Multigraph& g, Vertex skip) {
    const std::size_t n = g.vertex_count();
    const std::size_t alive = skip < n ? n - 1 : n;
    if (alive <= 1) return true;
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& e : g.edges()) {
        if (e.u == skip || e.v == skip) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    Vertex start = skip == 0 ? 1 : 0;
    std::vector<Vertex> stack{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == alive;
}

} // namespace

bool is_connected(const Multigraph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_without(g, g.vertex_count());
}

Integer spanning_tree_count(const Multigraph& g) {
    if (!is_connected(g)) {
        throw PreconditionError("spanning_tree_count: graph is disconnected");
    }
    return determinant(reduced_laplacian(g));
}

bool is_biconnected(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (!is_connected(g)) return false;
    if (n <= 2) return true;
    // Articulation points by lowpoint DFS; parallel edges are handled by
    // skipping only the edge index used to enter a vertex.
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::size_t timer = 0;
    bool cut_vertex = false;
    std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t parent_edge) {
        disc[v] = low[v] = ++timer;
        std::size_t children = 0;
        for (auto [w, ei] : adj[v]) {
            if (ei == parent_edge) continue;
            if (disc[w] != 0) {
                low[v] = std::min(low[v], disc[w]);
                continue;
            }
            ++children;
            dfs(w, ei);
            low[v] = std::min(low[v], low[w]);
            if (parent_edge != g.edge_count() && low[w] >= disc[v]) cut_vertex = true;
        }
        if (parent_edge == g.edge_count() && children > 1) cut_vertex = true;
    };
    dfs(0, g.edge_count());
    return !cut_vertex;
}

Multigraph wedge_sum(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2) {
    if (v1 >= g1.vertex_count() || v2 >= g2.vertex_count()) {
        throw PreconditionError("wedge_sum: vertex out of range");
    }
    const std::size_t n1 = g1.vertex_count();
    auto map2 = [&](Vertex w) -> Vertex {
        if (w == v2) return v1;
        return n1 + (w < v2 ? w : w - 1);
    };
    Multigraph out(n1 + g2.vertex_count() - 1, g1.edges());
    for (const auto& e : g2.edges()) out.add_edge(map2(e.u), map2(e.v));
    return out;
}

CanonicalKey canonical_form(const Multigraph& g, std::size_t vertex_cap) {
    const std::size_t n = g.vertex_count();
    if (n > vertex_cap) {
        throw CapExceeded("canonical_form: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(vertex_cap));
    }
    const auto mult = g.multiplicities();
    const auto deg = g.degrees();

    // Vertices grouped by descending degree; only within-group orders vary.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups; // [begin, end) in `order`
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && deg[order[j]] == deg[order[i]]) ++j;
        groups.push_back({i, j});
        i = j;
    }
    for (auto [b, e] : groups) std::sort(order.begin() + b, order.begin() + e);

    CanonicalKey best;
    best.n = n;
    bool have = false;
    std::vector<std::uint16_t> cur;
    cur.reserve(n * (n - (n ? 1 : 0)) / 2);
    for (;;) {
        cur.clear();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                cur.push_back(static_cast<std::uint16_t>(mult[order[i]][order[j]]));
            }
        }
        if (!have || cur < best.upper) {
            best.upper = cur;
            have = true;
        }
        // Odometer over the per-group permutations.
        std::size_t gi = 0;
        for (; gi < groups.size(); ++gi) {
            auto [b, e] = groups[gi];
            if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
        }
        if (gi == groups.size()) break;
    }
    return best;
}

Multigraph graph_from_key(const CanonicalKey& key) {
    Multigraph g(key.n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < key.n; ++i) {
        for (std::size_t j = i + 1; j < key.n; ++j, ++k) {
            for (std::uint16_t c = 0; c < key.upper.at(k); ++c) g.add_edge(i, j);
        }
    }
    return g;
}

Multigraph cycle_graph(std::size_t n) {
    if (n < 2) throw PreconditionError("cycle_graph needs n >= 2");
    Multigraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Multigraph banana_graph(std::size_t m) {
    Multigraph g(2);
    for (std::size_t i = 0; i < m; ++i) g.add_edge(0, 1);
    return g;
}

Multigraph complete_graph(std::size_t n) {
    Multigraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Multigraph path_graph(std::size_t n) {
    Multigraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph star_graph(std::size_t leaves) {
    Multigraph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace critgrp
