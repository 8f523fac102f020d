#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "critgrp/classify.hpp"
#include "critgrp/errors.hpp"
#include "critgrp/exact_linalg.hpp"
#include "critgrp/io.hpp"
#include "critgrp/lattice_jacobian.hpp"
#include "critgrp/matroid.hpp"
#include "critgrp/sandpile.hpp"

namespace py = pybind11;
using namespace critgrp;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;
using PyMatrix = std::vector<std::vector<py::int_>>;

py::int_ to_py(const Integer& z) {
    PyObject* o = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!o) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(o);
}

Integer from_py(const py::handle& h) {
    return Integer(py::str(py::int_(py::reinterpret_borrow<py::object>(h))).cast<std::string>());
}

py::list to_py(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& z : v) out.append(to_py(z));
    return out;
}

Multigraph make_graph(std::size_t n, const EdgeList& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) es.push_back({u, v});
    return Multigraph(n, std::move(es));
}

IntegerMatrix make_matrix(const py::sequence& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : py::len(rows[0]);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        py::sequence row = rows[i];
        if (row.size() != c) throw PreconditionError("matrix rows have different lengths");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
    }
    return m;
}

Divisor make_divisor(const py::sequence& values) {
    std::vector<Integer> v;
    for (const auto& x : values) v.push_back(from_py(x));
    return Divisor(std::move(v));
}

py::dict group_dict(const AbelianGroup& g) {
    py::dict d;
    d["invariant_factors"] = to_py(g.invariant_factors());
    d["exponent"] = to_py(g.exponent());
    d["order"] = to_py(g.order());
    return d;
}

py::list checks_list(const CheckReport& r) {
    py::list out;
    for (const auto& c : r.checks) {
        py::dict d;
        d["name"] = c.name;
        d["status"] = std::string(to_string(c.status));
        d["detail"] = c.detail;
        out.append(d);
    }
    return out;
}

py::list objects_list(const std::vector<ClassifiedObject>& v) {
    py::list out;
    for (const auto& o : v) {
        py::dict d = group_dict(o.jacobian);
        d["description"] = o.description;
        out.append(d);
    }
    return out;
}

py::dict classification_dict(const ClassificationResult& r) {
    py::dict d;
    d["kind"] = r.kind;
    d["k"] = r.k;
    d["examined"] = r.examined;
    d["found"] = objects_list(r.found);
    d["expected"] = objects_list(r.expected);
    d["checks"] = checks_list(r.checks);
    d["match"] = r.match;
    return d;
}

AbelianGroup graph_jacobian(const Multigraph& g, const std::string& route) {
    if (route == "laplacian") return jacobian_laplacian(g);
    if (route == "edge-lattice") return jacobian_edge_lattice(g, Orientation::standard(g));
    if (route == "dual-cut") {
        if (g.edge_count() == 0) return AbelianGroup();
        return jacobian_dual_cut(incidence_matrix(g, Orientation::standard(g)));
    }
    if (route == "reduced-divisors") return jacobian_by_reduced_divisors(g);
    throw PreconditionError("unknown route '" + route + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Jacobians of multigraphs and regular matroids";

    // Translators registered later are tried first, so the base class goes first.
    const auto& base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

    m.def(
        "jacobian",
        [](std::size_t n, const EdgeList& edges, const std::string& route) {
            return group_dict(graph_jacobian(make_graph(n, edges), route));
        },
        py::arg("n"), py::arg("edges"), py::arg("route") = "laplacian");

    m.def(
        "check_equivalence",
        [](std::size_t n, const EdgeList& edges) {
            const auto r = check_definition_equivalence(make_graph(n, edges));
            py::dict d;
            d["laplacian"] = group_dict(r.laplacian);
            d["edge_lattice"] = group_dict(r.edge_lattice);
            d["dual_cut"] = group_dict(r.dual_cut);
            d["reduced_divisors"] = r.reduced_divisors ? py::object(group_dict(*r.reduced_divisors)) : py::none();
            d["tree_count"] = to_py(r.tree_count);
            d["checks"] = checks_list(r.checks);
            d["passed"] = r.checks.passed();
            return d;
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "spanning_tree_count",
        [](std::size_t n, const EdgeList& edges) { return to_py(spanning_tree_count(make_graph(n, edges))); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "q_reduce",
        [](std::size_t n, const EdgeList& edges, const py::sequence& divisor, Vertex q) {
            return to_py(q_reduce(make_graph(n, edges), make_divisor(divisor), q).values);
        },
        py::arg("n"), py::arg("edges"), py::arg("divisor"), py::arg("q"));

    m.def(
        "is_q_reduced",
        [](std::size_t n, const EdgeList& edges, const py::sequence& divisor, Vertex q) {
            return is_q_reduced(make_graph(n, edges), make_divisor(divisor), q);
        },
        py::arg("n"), py::arg("edges"), py::arg("divisor"), py::arg("q"));

    m.def(
        "dhar_burn",
        [](std::size_t n, const EdgeList& edges, const py::sequence& divisor, Vertex q) {
            const auto r = dhar_burn(make_graph(n, edges), make_divisor(divisor), q);
            py::dict d;
            d["burnt"] = std::vector<bool>(r.burnt.begin(), r.burnt.end());
            d["order"] = r.order;
            d["all_burnt"] = r.all_burnt;
            return d;
        },
        py::arg("n"), py::arg("edges"), py::arg("divisor"), py::arg("q"));

    m.def(
        "smith_invariants", [](const py::sequence& a) { return to_py(smith_invariants(make_matrix(a))); },
        py::arg("matrix"));

    m.def(
        "row_space_projection",
        [](const py::sequence& a) {
            const auto p = row_space_projection(make_matrix(a));
            py::list rows;
            for (std::size_t i = 0; i < p.rows(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < p.cols(); ++j) {
                    row.append(py::make_tuple(to_py(p(i, j).get_num()), to_py(p(i, j).get_den())));
                }
                rows.append(row);
            }
            return rows;
        },
        py::arg("matrix"));

    m.def(
        "is_totally_unimodular", [](const py::sequence& a) { return is_totally_unimodular(make_matrix(a)); },
        py::arg("matrix"));

    m.def(
        "matroid_jacobian",
        [](const py::sequence& a, bool assume_tu) {
            return group_dict(matroid_jacobian(RegularMatroidRep(make_matrix(a), assume_tu ? TuCheck::waive : TuCheck::verify)));
        },
        py::arg("matrix"), py::arg("assume_tu") = false);

    m.def(
        "classify_graphs",
        [](unsigned k, std::size_t max_vertices, std::size_t max_edges, unsigned threads) {
            SearchBounds b;
            b.max_vertices = max_vertices;
            b.max_edges = max_edges;
            b.threads = threads;
            ClassificationResult r;
            {
                py::gil_scoped_release release;
                r = classify_biconnected_graphs(k, b);
            }
            return classification_dict(r);
        },
        py::arg("k"), py::arg("max_vertices") = 6, py::arg("max_edges") = 8, py::arg("threads") = 1);

    m.def(
        "classify_matroids",
        [](std::size_t max_rank, std::size_t max_elements, unsigned threads) {
            SearchBounds b;
            b.max_rank = max_rank;
            b.max_elements = max_elements;
            b.threads = threads;
            ClassificationResult r;
            {
                py::gil_scoped_release release;
                r = classify_regular_matroids_exp2(b);
            }
            return classification_dict(r);
        },
        py::arg("max_rank") = 3, py::arg("max_elements") = 5, py::arg("threads") = 1);
}
