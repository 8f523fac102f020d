// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
//
// Criteria listed in kKnownUnattainable are reported (and print FAIL when
// they fail) but do not affect the exit status; the reason is printed with
// the line. Pass --strict to count every failure.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "critgrp/classify.hpp"
#include "critgrp/lattice_jacobian.hpp"
#include "critgrp/matroid.hpp"
#include "critgrp/sandpile.hpp"
#include "oracles.hpp"

using namespace critgrp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

const std::set<std::string> kKnownUnattainable = {"6"};

const char* kKnownReason =
    "the maximum-degree bound fails on connected graphs with cut vertices, e.g. the star K_1,3 has trivial "
    "Jacobian; it holds on biconnected graphs (line 6b)";

SearchBounds graph_bounds(std::size_t n, std::size_t m) {
    SearchBounds b;
    b.max_vertices = n;
    b.max_edges = m;
    return b;
}

std::string one_line(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    for (auto& c : s) {
        if (c == '\n') c = ';';
    }
    return s;
}

const std::vector<Multigraph>& family() {
    static const auto f = enumerate_connected_multigraphs(graph_bounds(5, 7));
    return f;
}

Outcome cycles() {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto g = cycle_graph(n);
        const auto eq = check_definition_equivalence(g);
        const std::vector<Integer> want{Integer(n)};
        if (!eq.reduced_divisors || eq.laplacian.invariant_factors() != want || !eq.checks.passed() ||
            eq.laplacian.exponent() != n) {
            return {false, "C_" + std::to_string(n) + " gave " + eq.laplacian.to_string()};
        }
    }
    return {true, "C_2..C_10: four routes give Z/n, exponent n"};
}

Outcome bananas() {
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto eq = check_definition_equivalence(banana_graph(m));
        if (eq.laplacian.invariant_factors() != std::vector<Integer>{Integer(m)} || !eq.checks.passed()) {
            return {false, "B_" + std::to_string(m) + " gave " + eq.laplacian.to_string()};
        }
    }
    if (jacobian_laplacian(banana_graph(3)).exponent() != 3) return {false, "B_3 exponent"};
    return {true, "B_2..B_8: Z/m on every route; B_3 exponent 3"};
}

Outcome definition_equivalence() {
    std::size_t with_reduced = 0;
    for (const auto& g : family()) {
        const auto eq = check_definition_equivalence(g, 512);
        if (!eq.checks.passed()) return {false, "mismatch on " + one_line(graph_to_text(g))};
        if (eq.reduced_divisors) ++with_reduced;
    }
    return {true, std::to_string(family().size()) + " graphs, " + std::to_string(with_reduced) +
                      " also via reduced divisors, 0 mismatches"};
}

Outcome order_equals_trees() {
    for (const auto& g : family()) {
        const auto trees = oracle::spanning_trees_by_enumeration(g);
        const auto count = spanning_tree_count(g);
        if (count != trees) return {false, "tree count on " + one_line(graph_to_text(g))};
        const auto o = g.edge_count() == 0 ? Integer(1) : jacobian_dual_cut(incidence_matrix(g, Orientation::standard(g))).order();
        if (jacobian_laplacian(g).order() != trees || jacobian_edge_lattice(g, Orientation::standard(g)).order() != trees ||
            o != trees) {
            return {false, "order on " + one_line(graph_to_text(g))};
        }
    }
    return {true, std::to_string(family().size()) + " graphs, orders match brute-force tree enumeration"};
}

Outcome reduced_uniqueness() {
    std::size_t pairs = 0;
    for (const auto& g : family()) {
        const auto trees = oracle::spanning_trees_by_enumeration(g);
        for (Vertex q = 0; q < g.vertex_count(); ++q) {
            if (reduced_divisors_of_degree_zero(g, q).size() != trees) {
                return {false, one_line(graph_to_text(g)) + " q=" + std::to_string(q)};
            }
            ++pairs;
        }
    }
    return {true, std::to_string(pairs) + " (graph, q) pairs, reduced count = tree count"};
}

Outcome lower_bound(bool only_biconnected) {
    const auto r = lower_bound_sweep(graph_bounds(5, 7), only_biconnected);
    if (!r.passed()) {
        return {false, std::to_string(r.violations.size()) + " of " + std::to_string(r.examined) +
                           " violate, first: " + one_line(r.violations.front())};
    }
    return {true, std::to_string(r.examined) + " graphs, 0 violations"};
}

Outcome classify_graphs(unsigned k) {
    const auto r = classify_biconnected_graphs(k, graph_bounds(6, 8));
    std::string found;
    for (const auto& f : r.found) found += (found.empty() ? "" : " | ") + one_line(f.description);
    return {r.match, std::to_string(r.examined) + " graphs examined, found " + std::to_string(r.found.size()) +
                         ": " + found};
}

Outcome doubled_trees() {
    const auto r = verify_doubled_tree_characterization(graph_bounds(6, 8));
    if (!r.passed()) return {false, "counterexample: " + one_line(r.counterexamples.front())};
    return {true, std::to_string(r.examined) + " graphs, " + std::to_string(r.exponent_le2) +
                      " with exponent <= 2, all doubled trees, and conversely"};
}

Outcome matroids_exp2() {
    SearchBounds b;
    b.max_rank = 3;
    b.max_elements = 5;
    const auto r = classify_regular_matroids_exp2(b);
    for (const auto& f : r.found) {
        if (f.jacobian.exponent() > 2) return {false, "non exponent-2 object in found list"};
    }
    std::string failing;
    for (const auto& c : r.checks.checks) {
        if (c.status == CheckStatus::fail) failing += " " + c.name;
    }
    if (!r.match) return {false, "mismatch;" + failing};
    return {true, std::to_string(r.examined) + " connected loopless TU matroids, exponent <= 2 only for U(1,1), U(1,2)"};
}

Outcome projection_identities() {
    std::size_t inputs = 0;
    for (const auto& g : family()) {
        if (g.edge_count() == 0) continue;
        const auto rep = check_projection_identities(projection_and_dual(incidence_matrix(g, Orientation::standard(g))));
        if (!rep.passed()) return {false, one_line(graph_to_text(g))};
        ++inputs;
    }
    SearchBounds b;
    for (const auto& m : enumerate_connected_tu_matrices(b)) {
        if (!check_projection_identities(projection_and_dual(m)).passed()) return {false, one_line(matrix_to_text(m))};
        ++inputs;
    }
    return {true, std::to_string(inputs) + " graph and matroid inputs"};
}

Outcome orientation_and_wedge() {
    const auto small = enumerate_connected_multigraphs(graph_bounds(4, 5));
    std::mt19937 rng(2024);
    std::size_t reorientations = 0, wedges = 0;
    for (const auto& g : small) {
        if (g.edge_count() == 0) continue;
        const auto base = jacobian_laplacian(g);
        for (int t = 0; t < 4; ++t) {
            Orientation o = Orientation::standard(g);
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                if (rng() % 2) o.reverse(e);
            }
            if (jacobian_edge_lattice(g, o) != base || jacobian_dual_cut(incidence_matrix(g, o)) != base) {
                return {false, "orientation changed the group of " + one_line(graph_to_text(g))};
            }
            ++reorientations;
        }
    }
    for (const auto& a : small) {
        const auto ja = jacobian_laplacian(a);
        for (const auto& b : small) {
            const auto want = ja.direct_sum(jacobian_laplacian(b));
            for (Vertex v1 = 0; v1 < a.vertex_count(); ++v1) {
                for (Vertex v2 = 0; v2 < b.vertex_count(); ++v2) {
                    if (jacobian_laplacian(wedge_sum(a, v1, b, v2)) != want) {
                        return {false, "wedge of " + one_line(graph_to_text(a)) + " and " + one_line(graph_to_text(b))};
                    }
                    ++wedges;
                }
            }
        }
    }
    return {true, std::to_string(reorientations) + " reorientations, " + std::to_string(wedges) + " wedges"};
}

Outcome exponent3_diagnostics() {
    for (const auto& [name, g] : {std::pair{"C_3", cycle_graph(3)}, std::pair{"B_3", banana_graph(3)}}) {
        const auto rep = exponent3_entry_diagnostics(RegularMatroidRep(incidence_matrix(g, Orientation::standard(g))));
        if (!rep.applicable() || !rep.passed() || rep.checks.size() != 4) return {false, name};
    }
    return {true, "C_3 and B_3 satisfy all four entry conditions"};
}

} // namespace

int main(int argc, char** argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria = {
        {"1", {"cycle groups", cycles}},
        {"2", {"banana graphs", bananas}},
        {"3", {"definition equivalence (n<=5, m<=7)", definition_equivalence}},
        {"4", {"order = spanning tree count", order_equals_trees}},
        {"5", {"q-reduced uniqueness for every q", reduced_uniqueness}},
        {"6", {"exponent >= max degree, connected graphs", [] { return lower_bound(false); }}},
        {"6b", {"exponent >= max degree, biconnected graphs", [] { return lower_bound(true); }}},
        {"7", {"k=2 biconnected classification (6, 8)", [] { return classify_graphs(2); }}},
        {"8", {"k=3 biconnected classification (6, 8)", [] { return classify_graphs(3); }}},
        {"9", {"doubled-tree characterization (6, 8)", doubled_trees}},
        {"10", {"regular matroids with exponent <= 2 (3, 5)", matroids_exp2}},
        {"11", {"projection identities", projection_identities}},
        {"12", {"orientation and wedge invariance", orientation_and_wedge}},
        {"13", {"exponent-3 projection diagnostics", exponent3_diagnostics}},
    };
    int unexpected = 0, known = 0;
    for (const auto& [id, entry] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = entry.second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool is_known = kKnownUnattainable.count(id) > 0;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << entry.first << " -- " << o.detail
                  << " [" << std::fixed << std::setprecision(1) << secs << "s]";
        if (!o.ok && is_known) std::cout << " (known unattainable: " << kKnownReason << ")";
        std::cout << std::endl;
        if (!o.ok) (is_known && !strict ? known : unexpected) += 1;
    }
    std::cout << "summary: " << unexpected << " unexpected failure(s), " << known << " known unattainable" << std::endl;
    return unexpected == 0 ? 0 : 1;
}
