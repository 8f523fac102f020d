#include "critgrp/lattice_jacobian.hpp"

#include <deque>
#include <numeric>

namespace critgrp {

namespace {

struct BfsTree {
    std::vector<std::size_t> parent_edge; // edge index to parent, or m for the root
    std::vector<Vertex> parent;
    std::vector<std::size_t> depth;
    std::vector<bool> is_tree_edge;
};

BfsTree bfs_tree(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < m; ++i) {
        adj[g.edges()[i].u].push_back({g.edges()[i].v, i});
        adj[g.edges()[i].v].push_back({g.edges()[i].u, i});
    }
    BfsTree t{std::vector<std::size_t>(n, m), std::vector<Vertex>(n, n), std::vector<std::size_t>(n, 0),
              std::vector<bool>(m, false)};
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            t.parent[w] = v;
            t.parent_edge[w] = e;
            t.depth[w] = t.depth[v] + 1;
            t.is_tree_edge[e] = true;
            queue.push_back(w);
        }
    }
    return t;
}

void require_connected(const Multigraph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

std::vector<Integer> strip_units(const std::vector<Integer>& diag, const char* where) {
    std::vector<Integer> out;
    for (const auto& d : diag) {
        if (d == 0) throw InternalError(std::string(where) + ": rank defect");
        if (d > 1) out.push_back(d);
    }
    return out;
}

} // namespace

Lattice cycle_lattice_basis(const Multigraph& g, const Orientation& o) {
    require_connected(g);
    if (!o.matches(g)) throw PreconditionError("orientation does not match the graph's edges");
    const std::size_t m = g.edge_count();
    const BfsTree tree = bfs_tree(g);
    std::vector<std::vector<Integer>> columns;
    for (std::size_t e = 0; e < m; ++e) {
        if (tree.is_tree_edge[e]) continue;
        std::vector<Integer> z(m, Integer(0));
        // Walk tail(e) -e-> head(e) -> ... -> tail(e) through the tree.
        z[e] = 1;
        Vertex a = o.head[e];
        Vertex b = o.tail[e];
        while (a != b) {
            if (tree.depth[a] >= tree.depth[b]) {
                // Step a -> parent(a), travelling along edge f.
                std::size_t f = tree.parent_edge[a];
                z[f] += o.tail[f] == a ? 1 : -1;
                a = tree.parent[a];
            } else {
                // The final path arrives at b from parent(b).
                std::size_t f = tree.parent_edge[b];
                z[f] += o.head[f] == b ? 1 : -1;
                b = tree.parent[b];
            }
        }
        columns.push_back(std::move(z));
    }
    IntegerMatrix basis(m, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < m; ++i) basis(i, j) = columns[j][i];
    }
    return Lattice(std::move(basis));
}

Lattice cut_lattice_basis(const Multigraph& g, const Orientation& o) {
    require_connected(g);
    IntegerMatrix d = incidence_matrix(g, o);
    std::vector<std::size_t> rows(g.vertex_count() - 1);
    std::iota(rows.begin(), rows.end(), std::size_t{1});
    return Lattice(d.select_rows(rows).transpose());
}

EdgeSpaceDecomposition projection_and_dual(const IntegerMatrix& representation) {
    const std::size_t m = representation.cols();
    EdgeSpaceDecomposition dec;
    dec.representation = representation;
    dec.cycles = integer_kernel_basis(representation);
    dec.cuts = dec.cycles.generator_count() == 0
                   ? Lattice::standard(m)
                   : integer_kernel_basis(dec.cycles.generators().transpose());
    dec.projection = row_space_projection(representation);
    dec.dual_cuts = Lattice::from_rational_generators(dec.projection);

    const RationalMatrix cut_basis = dec.cuts.basis();
    if (!(dec.projection * cut_basis == cut_basis)) {
        throw InternalError("projection does not fix the cut lattice");
    }
    if (dec.dual_cuts.generator_count() != dec.cuts.generator_count()) {
        throw InternalError("dual cut lattice rank differs from cut lattice rank");
    }
    return dec;
}

AbelianGroup jacobian_laplacian(const Multigraph& g) {
    require_connected(g);
    return AbelianGroup::from_invariant_factors(
        strip_units(smith_invariants(reduced_laplacian(g)), "jacobian_laplacian"));
}

AbelianGroup jacobian_edge_lattice(const Multigraph& g, const Orientation& o) {
    require_connected(g);
    const Lattice z = cycle_lattice_basis(g, o);
    const Lattice b = cut_lattice_basis(g, o);
    const std::size_t m = g.edge_count();
    if (z.generator_count() + b.generator_count() != m) {
        throw InternalError("cycle and cut bases do not fill the edge space");
    }
    IntegerMatrix stacked(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < z.generator_count(); ++j) stacked(i, j) = z.generators()(i, j);
        for (std::size_t j = 0; j < b.generator_count(); ++j) {
            stacked(i, z.generator_count() + j) = b.generators()(i, j);
        }
    }
    return AbelianGroup::from_invariant_factors(strip_units(smith_invariants(stacked), "jacobian_edge_lattice"));
}

AbelianGroup jacobian_dual_cut(const IntegerMatrix& representation) {
    const EdgeSpaceDecomposition dec = projection_and_dual(representation);
    return lattice_quotient_invariants(dec.cuts, dec.dual_cuts);
}

EquivalenceReport check_definition_equivalence(const Multigraph& g, std::size_t group_cap) {
    require_connected(g);
    const Orientation o = Orientation::standard(g);
    EquivalenceReport r{jacobian_laplacian(g), jacobian_edge_lattice(g, o),
                        jacobian_dual_cut(incidence_matrix(g, o)), std::nullopt, spanning_tree_count(g), {}};
    r.checks.add("edge-lattice = laplacian", r.edge_lattice == r.laplacian,
                 r.edge_lattice.to_string() + " vs " + r.laplacian.to_string());
    r.checks.add("dual-cut = laplacian", r.dual_cut == r.laplacian,
                 r.dual_cut.to_string() + " vs " + r.laplacian.to_string());
    if (r.tree_count <= static_cast<unsigned long>(group_cap)) {
        r.reduced_divisors = jacobian_by_reduced_divisors(g, 0, group_cap);
        r.checks.add("reduced-divisors = laplacian", *r.reduced_divisors == r.laplacian,
                     r.reduced_divisors->to_string() + " vs " + r.laplacian.to_string());
    } else {
        r.checks.add_not_applicable("reduced-divisors = laplacian", "group order above cap");
    }
    r.checks.add("order = spanning trees", r.laplacian.order() == r.tree_count,
                 r.laplacian.order().get_str() + " vs " + r.tree_count.get_str());
    return r;
}

CheckReport check_exact_sequence(const Multigraph& g) {
    require_connected(g);
    const IntegerMatrix d = incidence_matrix(g, Orientation::standard(g));
    CheckReport report;
    bool sums_zero = true;
    for (std::size_t e = 0; e < d.cols(); ++e) {
        Integer s = 0;
        for (std::size_t v = 0; v < d.rows(); ++v) s += d(v, e);
        if (s != 0) sums_zero = false;
    }
    report.add("image of D lies in ker sigma", sums_zero);

    const BfsTree tree = bfs_tree(g);
    bool all_solved = true;
    std::string missing;
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        std::vector<Integer> target(g.vertex_count(), Integer(0));
        target[v] = 1;
        target[tree.parent[v]] = -1;
        auto x = solve_integer(d, target);
        bool ok = x.has_value();
        if (ok) {
            for (std::size_t i = 0; i < d.rows() && ok; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < d.cols(); ++j) s += d(i, j) * (*x)[j];
                ok = s == target[i];
            }
        }
        if (!ok) {
            all_solved = false;
            missing += "e" + std::to_string(v) + "-e" + std::to_string(tree.parent[v]) + " ";
        }
    }
    report.add("ker sigma generators lie in D(C_I)", all_solved, missing);
    return report;
}

CheckReport check_projection_identities(const EdgeSpaceDecomposition& dec) {
    CheckReport report;
    const RationalMatrix& P = dec.projection;
    report.add("P^2 = P", P * P == P);
    report.add("P^t = P", P.transpose() == P);
    const RationalMatrix dt = to_rational(dec.representation.transpose());
    report.add("P D^t = D^t", P * dt == dt);
    const RationalMatrix z = dec.cycles.basis();
    report.add("P z = 0 on cycles", (P * z).is_zero());
    bool bounded = true;
    for (const auto& x : P.data()) {
        if (x < -1 || x > 1) bounded = false;
    }
    report.add("entries in [-1, 1]", bounded);
    // Every column of P pairs integrally with every generator of B_I.
    const RationalMatrix pairing = P.transpose() * dec.cuts.basis();
    bool integral = true;
    for (const auto& x : pairing.data()) {
        if (x.get_den() != 1) integral = false;
    }
    report.add("columns of P lie in the dual of B_I", integral);
    return report;
}

} // namespace critgrp
