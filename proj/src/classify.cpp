#include "critgrp/classify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>

#include "critgrp/lattice_jacobian.hpp"
#include "critgrp/matroid.hpp"
#include "critgrp/parallel.hpp"

namespace critgrp {

SearchCaps search_caps() {
    const char* override = std::getenv("CRITGRP_CAP_OVERRIDE");
    if (override != nullptr && *override != '\0') {
        return {kCanonicalVertexCap, 16, 5, 10};
    }
    return {7, 10, 4, 7};
}

namespace {

void check_graph_bounds(const SearchBounds& b) {
    const SearchCaps caps = search_caps();
    if (b.max_vertices > caps.max_vertices || b.max_edges > caps.max_edges) {
        throw CapExceeded("graph search bounds (" + std::to_string(b.max_vertices) + ", " +
                          std::to_string(b.max_edges) + ") exceed caps (" + std::to_string(caps.max_vertices) +
                          ", " + std::to_string(caps.max_edges) + "); set CRITGRP_CAP_OVERRIDE to raise them");
    }
}

void check_matroid_bounds(const SearchBounds& b) {
    const SearchCaps caps = search_caps();
    if (b.max_rank > caps.max_rank || b.max_elements > caps.max_elements) {
        throw CapExceeded("matroid search bounds (" + std::to_string(b.max_rank) + ", " +
                          std::to_string(b.max_elements) + ") exceed caps (" + std::to_string(caps.max_rank) + ", " +
                          std::to_string(caps.max_elements) + "); set CRITGRP_CAP_OVERRIDE to raise them");
    }
}

bool simple_mask_connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs, std::uint32_t mask) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!(mask >> k & 1)) continue;
        auto a = find(pairs[k].first), c = find(pairs[k].second);
        if (a != c) {
            parent[a] = c;
            --components;
        }
    }
    return components == 1;
}

std::string describe(const Multigraph& g) {
    return graph_to_text(graph_from_key(canonical_form(g)));
}

} // namespace

std::vector<Multigraph> enumerate_connected_multigraphs(const SearchBounds& b) {
    check_graph_bounds(b);
    std::vector<Multigraph> out;
    if (b.max_vertices >= 1) out.push_back(Multigraph(1));
    for (std::size_t n = 2; n <= b.max_vertices; ++n) {
        if (n - 1 > b.max_edges) break;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) pairs.push_back({i, j});
        }
        // Simple connected skeletons up to isomorphism.
        std::set<CanonicalKey> skeletons;
        const std::uint32_t limit = std::uint32_t{1} << pairs.size();
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            const auto s = static_cast<std::size_t>(std::popcount(mask));
            if (s < n - 1 || s > b.max_edges) continue;
            if (!simple_mask_connected(n, pairs, mask)) continue;
            Multigraph g(n);
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
            }
            skeletons.insert(canonical_form(g));
        }
        // Spread the remaining edge budget over each skeleton as multiplicities.
        std::set<CanonicalKey> found;
        for (const auto& key : skeletons) {
            const Multigraph skel = graph_from_key(key);
            const std::size_t s = skel.edge_count();
            const std::size_t budget = b.max_edges - s;
            std::vector<std::size_t> extra(s, 0);
            for (;;) {
                std::size_t used = 0;
                for (auto x : extra) used += x;
                if (used <= budget) {
                    Multigraph g(n);
                    for (std::size_t k = 0; k < s; ++k) {
                        for (std::size_t c = 0; c <= extra[k]; ++c) g.add_edge(skel.edges()[k].u, skel.edges()[k].v);
                    }
                    found.insert(canonical_form(g));
                }
                std::size_t k = 0;
                for (; k < s; ++k) {
                    if (++extra[k] <= budget) break;
                    extra[k] = 0;
                }
                if (k == s) break;
            }
        }
        std::vector<Multigraph> level;
        for (const auto& key : found) level.push_back(graph_from_key(key));
        std::stable_sort(level.begin(), level.end(),
                         [](const Multigraph& a, const Multigraph& c) { return a.edge_count() < c.edge_count(); });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

ClassificationResult classify_biconnected_graphs(unsigned k, const SearchBounds& b) {
    if (k < 1 || k > 3) throw PreconditionError("graph classification supports k = 1, 2, 3");
    ClassificationResult r;
    r.kind = "graphs";
    r.k = k;
    r.bounds = b;
    const auto graphs = enumerate_connected_multigraphs(b);
    struct Eval {
        bool biconnected = false;
        AbelianGroup jac;
    };
    const auto evals = parallel_map(graphs.size(), b.threads, [&](std::size_t i) {
        Eval e;
        e.biconnected = is_biconnected(graphs[i]);
        if (e.biconnected) e.jac = jacobian_laplacian(graphs[i]);
        return e;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!evals[i].biconnected) continue;
        ++r.examined;
        if (evals[i].jac.exponent() <= k) r.found.push_back({describe(graphs[i]), evals[i].jac});
    }

    std::vector<Multigraph> known{Multigraph(1), path_graph(2)};
    if (k >= 2) known.push_back(cycle_graph(2));
    if (k >= 3) {
        known.push_back(cycle_graph(3));
        known.push_back(banana_graph(3));
    }
    for (const auto& g : known) {
        if (g.vertex_count() <= b.max_vertices && g.edge_count() <= b.max_edges) {
            r.expected.push_back({describe(g), jacobian_laplacian(g)});
        }
    }
    auto by_text = [](const ClassifiedObject& a, const ClassifiedObject& c) { return a.description < c.description; };
    std::sort(r.found.begin(), r.found.end(), by_text);
    std::sort(r.expected.begin(), r.expected.end(), by_text);
    r.match = r.found == r.expected;
    return r;
}

bool is_doubled_tree(const Multigraph& g) {
    if (!is_connected(g)) return false;
    const auto mult = g.multiplicities();
    std::size_t classes = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j) {
            if (mult[i][j] == 0) continue;
            if (mult[i][j] > 2) return false;
            ++classes;
        }
    }
    return classes + 1 == g.vertex_count();
}

CharacterizationReport verify_doubled_tree_characterization(const SearchBounds& b) {
    const auto graphs = enumerate_connected_multigraphs(b);
    const auto exps = parallel_map(graphs.size(), b.threads,
                                   [&](std::size_t i) { return jacobian_laplacian(graphs[i]).exponent(); });
    CharacterizationReport r;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++r.examined;
        const bool small_exp = exps[i] <= 2;
        const bool shape = is_doubled_tree(graphs[i]);
        if (small_exp) ++r.exponent_le2;
        if (shape) ++r.doubled_trees;
        if (small_exp != shape) {
            r.counterexamples.push_back(graph_to_text(graphs[i]) + "# exponent " + exps[i].get_str() +
                                        (shape ? ", doubled tree" : ", not a doubled tree"));
        }
    }
    return r;
}

std::vector<IntegerMatrix> enumerate_connected_tu_matrices(const SearchBounds& b) {
    check_matroid_bounds(b);
    std::vector<IntegerMatrix> out;
    for (std::size_t r = 1; r <= b.max_rank; ++r) {
        // Nonzero columns of {-1,0,1}^r with first nonzero entry +1.
        std::vector<std::vector<int>> columns;
        std::size_t total = 1;
        for (std::size_t i = 0; i < r; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<int> col(r);
            std::size_t c = code;
            for (std::size_t i = 0; i < r; ++i, c /= 3) col[i] = static_cast<int>(c % 3) - 1;
            auto first = std::find_if(col.begin(), col.end(), [](int x) { return x != 0; });
            if (first != col.end() && *first == 1) columns.push_back(std::move(col));
        }
        // Multisets of columns: nondecreasing index sequences.
        std::vector<IntegerMatrix> candidates;
        for (std::size_t size = 1; size <= b.max_elements; ++size) {
            std::vector<std::size_t> idx(size, 0);
            for (;;) {
                IntegerMatrix a(r, size);
                for (std::size_t j = 0; j < size; ++j) {
                    for (std::size_t i = 0; i < r; ++i) a(i, j) = columns[idx[j]][i];
                }
                candidates.push_back(std::move(a));
                std::size_t p = size;
                while (p > 0 && idx[p - 1] == columns.size() - 1) --p;
                if (p == 0) break;
                ++idx[p - 1];
                for (std::size_t q = p; q < size; ++q) idx[q] = idx[p - 1];
            }
        }
        const auto keep = parallel_map(candidates.size(), b.threads, [&](std::size_t i) {
            return is_totally_unimodular(candidates[i]) &&
                   is_connected_matroid(RegularMatroidRep(candidates[i], TuCheck::waive));
        });
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (keep[i]) out.push_back(std::move(candidates[i]));
        }
    }
    return out;
}

ClassificationResult classify_regular_matroids_exp2(const SearchBounds& b) {
    ClassificationResult r;
    r.kind = "matroids";
    r.k = 2;
    r.bounds = b;
    const auto reps = enumerate_connected_tu_matrices(b);
    r.examined = reps.size();

    struct Eval {
        AbelianGroup jac;
        CheckReport checks;
    };
    const auto evals = parallel_map(reps.size(), b.threads, [&](std::size_t i) {
        RegularMatroidRep m(reps[i], TuCheck::waive);
        Eval e{matroid_jacobian(m), {}};
        if (e.jac.exponent() <= 2) e.checks = exponent2_structure_check(m);
        return e;
    });

    // Every survivor is identified by its matroid type; anything beyond a
    // single element or a parallel pair is reported verbatim.
    std::map<std::string, AbelianGroup> types;
    std::size_t instances = 0, too_large = 0, structure_failures = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_condition; // name -> (pass, fail)
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Eval& e = evals[i];
        if (e.jac.exponent() > 2) continue;
        ++instances;
        const std::size_t n = reps[i].cols();
        std::string type;
        if (n == 1) {
            type = "U(1,1): single element";
        } else if (n == 2 && rank(reps[i]) == 1) {
            type = "U(1,2): two parallel elements";
        } else {
            type = "other:\n" + matrix_to_text(reps[i]);
        }
        if (n > 2) ++too_large;
        if (!e.checks.passed()) ++structure_failures;
        for (const auto& c : e.checks.checks) {
            auto& slot = per_condition[c.name];
            if (c.status == CheckStatus::pass) ++slot.first;
            if (c.status == CheckStatus::fail) ++slot.second;
        }
        types.emplace(type, e.jac);
    }
    for (const auto& [type, jac] : types) r.found.push_back({type, jac});
    r.expected.push_back({"U(1,1): single element", AbelianGroup{}});
    if (b.max_elements >= 2) {
        const Integer two = 2;
        r.expected.push_back({"U(1,2): two parallel elements", AbelianGroup::from_invariant_factors({two})});
    }
    r.checks.add("exponent <= 2 instances have <= 2 elements", too_large == 0,
                 std::to_string(instances) + " instances, " + std::to_string(too_large) + " larger");
    r.checks.add("projection structure holds", structure_failures == 0,
                 std::to_string(structure_failures) + " failures");
    for (const auto& [name, counts] : per_condition) {
        r.checks.add(name, counts.second == 0,
                     std::to_string(counts.first) + " pass, " + std::to_string(counts.second) + " fail");
    }
    r.match = r.found == r.expected && r.checks.passed();
    return r;
}

LowerBoundReport lower_bound_sweep(const SearchBounds& b, bool only_biconnected) {
    auto graphs = enumerate_connected_multigraphs(b);
    std::erase_if(graphs, [&](const Multigraph& g) {
        return g.vertex_count() < 2 || (only_biconnected && !is_biconnected(g));
    });
    const auto exps = parallel_map(graphs.size(), b.threads,
                                   [&](std::size_t i) { return jacobian_laplacian(graphs[i]).exponent(); });
    LowerBoundReport r;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++r.examined;
        const std::size_t delta = graphs[i].max_degree();
        if (exps[i] < static_cast<unsigned long>(delta)) {
            r.violations.push_back(graph_to_text(graphs[i]) + "# exponent " + exps[i].get_str() + " < max degree " +
                                   std::to_string(delta));
        }
    }
    return r;
}

} // namespace critgrp
