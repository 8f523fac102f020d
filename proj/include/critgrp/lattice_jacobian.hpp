#pragma once

#include "critgrp/abelian_group.hpp"
#include "critgrp/check_report.hpp"
#include "critgrp/exact_linalg.hpp"
#include "critgrp/graph.hpp"
#include "critgrp/sandpile.hpp"

namespace critgrp {

/// Fundamental cycles of a BFS spanning tree rooted at vertex 0, one column
/// per non-tree edge, entries in {-1, 0, 1}. Not canonicalized.
Lattice cycle_lattice_basis(const Multigraph& g, const Orientation& o);

/// Vertex cuts: rows 1..n-1 of the incidence matrix as columns.
Lattice cut_lattice_basis(const Multigraph& g, const Orientation& o);

/// Edge-space data of a representation matrix D (graph incidence matrix or
/// matroid representation).
struct EdgeSpaceDecomposition {
    IntegerMatrix representation; // D
    Lattice cycles;               // Z_I = ker D on Z^m
    Lattice cuts;                 // B_I = integer points orthogonal to Z_I
    RationalMatrix projection;    // P onto the row space of D
    Lattice dual_cuts;            // lattice generated by the columns of P
};

EdgeSpaceDecomposition projection_and_dual(const IntegerMatrix& representation);

/// Invariant factors of the reduced Laplacian's Smith form.
AbelianGroup jacobian_laplacian(const Multigraph& g);

/// C_I / (Z_I + B_I) from the stacked cycle and cut bases.
AbelianGroup jacobian_edge_lattice(const Multigraph& g, const Orientation& o);

/// B_I^# / B_I for any representation matrix.
AbelianGroup jacobian_dual_cut(const IntegerMatrix& representation);

/// Compares every Jacobian route on g; the reduced-divisor route runs only
/// when the tree count is at most `group_cap`.
struct EquivalenceReport {
    AbelianGroup laplacian;
    AbelianGroup edge_lattice;
    AbelianGroup dual_cut;
    std::optional<AbelianGroup> reduced_divisors;
    Integer tree_count;
    CheckReport checks;
};

EquivalenceReport check_definition_equivalence(const Multigraph& g, std::size_t group_cap = kDefaultGroupCap);

/// Columns of D sum to zero, and each e_v - e_w over a spanning-tree edge is
/// an integer combination of the columns of D.
CheckReport check_exact_sequence(const Multigraph& g);

/// P^2 = P, P^t = P, P D^t = D^t, P z = 0 on the cycle basis, entries in
/// [-1, 1], and P's columns pair integrally with the cut lattice.
CheckReport check_projection_identities(const EdgeSpaceDecomposition& dec);

} // namespace critgrp
