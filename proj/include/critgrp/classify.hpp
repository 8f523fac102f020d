#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "critgrp/abelian_group.hpp"
#include "critgrp/check_report.hpp"
#include "critgrp/graph.hpp"
#include "critgrp/io.hpp"
#include "critgrp/matrix.hpp"

namespace critgrp {

struct SearchBounds {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 8;
    std::size_t max_rank = 3;
    std::size_t max_elements = 5;
    std::size_t group_cap = 512;
    unsigned threads = 1;
};

/// Upper limits on SearchBounds. CRITGRP_CAP_OVERRIDE in the environment
/// raises them (unsupported scale: runtimes grow very quickly).
struct SearchCaps {
    std::size_t max_vertices;
    std::size_t max_edges;
    std::size_t max_rank;
    std::size_t max_elements;
};
SearchCaps search_caps();

/// Every connected loopless multigraph with at most max_vertices vertices
/// and max_edges edges, once per isomorphism class, in canonical labeling.
/// Ordered by (vertex count, edge count, canonical key). Includes K_1.
std::vector<Multigraph> enumerate_connected_multigraphs(const SearchBounds& b);

struct ClassifiedObject {
    std::string description; // graph or matroid text format
    AbelianGroup jacobian;
    friend bool operator==(const ClassifiedObject&, const ClassifiedObject&) = default;
};

struct ClassificationResult {
    std::string kind; // "graphs" or "matroids"
    unsigned k = 0;
    SearchBounds bounds;
    std::size_t examined = 0;
    std::vector<ClassifiedObject> found;
    std::vector<ClassifiedObject> expected;
    CheckReport checks; // extra structural conditions (matroids)
    bool match = false;
};

/// Biconnected graphs within bounds whose Jacobian has exponent <= k,
/// compared against the known list for k in {1, 2, 3}.
ClassificationResult classify_biconnected_graphs(unsigned k, const SearchBounds& b);

/// Exponent <= 2 iff the graph is a tree with some edges doubled, in both
/// directions, over every connected graph within bounds.
struct CharacterizationReport {
    std::size_t examined = 0;
    std::size_t exponent_le2 = 0;
    std::size_t doubled_trees = 0;
    std::vector<std::string> counterexamples; // graph text of each failure
    bool passed() const { return counterexamples.empty(); }
};
CharacterizationReport verify_doubled_tree_characterization(const SearchBounds& b);

/// Collapsing parallel classes gives a tree and no class exceeds 2.
bool is_doubled_tree(const Multigraph& g);

/// All {-1,0,1} matrices up to max_rank x max_elements with nonzero columns,
/// up to column permutation and column negation, that are totally unimodular
/// and connected as matroids.
std::vector<IntegerMatrix> enumerate_connected_tu_matrices(const SearchBounds& b);

/// Connected loopless TU matroids within bounds with exponent <= 2: each must
/// have at most two elements and satisfy the projection structure checks.
ClassificationResult classify_regular_matroids_exp2(const SearchBounds& b);

/// exponent(Jac G) >= max degree over connected graphs with >= 2 vertices.
/// `only_biconnected` restricts the sweep to biconnected graphs.
struct LowerBoundReport {
    std::size_t examined = 0;
    std::vector<std::string> violations; // graph text plus exponent and degree
    bool passed() const { return violations.empty(); }
};
LowerBoundReport lower_bound_sweep(const SearchBounds& b, bool only_biconnected = false);

} // namespace critgrp
