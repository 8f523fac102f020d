#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "critgrp/matrix.hpp"

namespace critgrp {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph on vertices 0..n-1. Parallel edges are
/// allowed, self-loops are not. The order of `edges()` fixes the edge
/// indexing used by every matrix built from the graph.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t n, std::vector<Edge> edges = {});

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;
    std::vector<std::size_t> degrees() const;

    /// Symmetric n x n matrix of edge multiplicities.
    std::vector<std::vector<std::size_t>> multiplicities() const;

    void add_edge(Vertex u, Vertex v);

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Head and tail of every edge.
struct Orientation {
    std::vector<Vertex> tail;
    std::vector<Vertex> head;

    /// tail = smaller endpoint, head = larger.
    static Orientation standard(const Multigraph& g);
    /// Edge i is oriented from `edges()[i].u` to `edges()[i].v` as listed.
    static Orientation as_listed(const Multigraph& g);

    bool matches(const Multigraph& g) const;
    void reverse(std::size_t edge);
};

IntegerMatrix incidence_matrix(const Multigraph& g, const Orientation& o);
IntegerMatrix laplacian(const Multigraph& g);
/// Laplacian with its last row and column removed.
IntegerMatrix reduced_laplacian(const Multigraph& g);

bool is_connected(const Multigraph& g);
Integer spanning_tree_count(const Multigraph& g);

/// Connected with no cut vertex. K_1 and a single edge count as biconnected.
bool is_biconnected(const Multigraph& g);

/// Identify v1 in g1 with v2 in g2. Vertices of g1 keep their indices; the
/// remaining vertices of g2 follow in order. Edges of g1 precede those of g2.
Multigraph wedge_sum(const Multigraph& g1, Vertex v1, const Multigraph& g2, Vertex v2);

/// Isomorphism-invariant key: vertex count plus the upper triangle of the
/// multiplicity matrix under the lexicographically least relabeling among
/// those that sort vertices by descending degree.
struct CanonicalKey {
    std::size_t n = 0;
    std::vector<std::uint16_t> upper;
    auto operator<=>(const CanonicalKey&) const = default;
};

/// Default largest vertex count accepted by canonical_form.
inline constexpr std::size_t kCanonicalVertexCap = 8;

CanonicalKey canonical_form(const Multigraph& g, std::size_t vertex_cap = kCanonicalVertexCap);
/// The graph a key describes; edges listed in lexicographic order.
Multigraph graph_from_key(const CanonicalKey& key);

// Named families.
Multigraph cycle_graph(std::size_t n);   // C_n, n >= 2 (C_2 is a doubled edge)
Multigraph banana_graph(std::size_t m);  // B_m, two vertices and m parallel edges
Multigraph complete_graph(std::size_t n);
Multigraph path_graph(std::size_t n);    // n vertices
Multigraph star_graph(std::size_t leaves);

} // namespace critgrp
