#include "critgrp/cli.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "critgrp/errors.hpp"
#include "critgrp/io.hpp"
#include "critgrp/lattice_jacobian.hpp"
#include "critgrp/matroid.hpp"
#include "critgrp/parallel.hpp"
#include "critgrp/sandpile.hpp"

namespace critgrp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string digest_of_files(std::initializer_list<std::filesystem::path> paths) {
    std::string bytes;
    for (const auto& p : paths) bytes += read_file(p);
    return "sha256:" + sha256_hex(bytes);
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json factors_json(const AbelianGroup& g) {
    json out = json::array();
    for (const auto& d : g.invariant_factors()) out.push_back(d.get_str());
    return out;
}

json divisor_json(const Divisor& d) {
    json out = json::array();
    for (const auto& x : d.values) out.push_back(x.get_str());
    return out;
}

std::string group_line(const AbelianGroup& g) {
    return g.to_string() + "  (exponent " + g.exponent().get_str() + ", order " + g.order().get_str() + ")";
}

std::string checks_text(const CheckReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        out += "  [" + std::string(to_string(c.status)) + "] " + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += '\n';
    }
    return out;
}

RegularMatroidRep load_matroid(const std::filesystem::path& path, bool assume_tu) {
    return RegularMatroidRep(read_matroid_file(path), assume_tu ? TuCheck::waive : TuCheck::verify);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
    return out;
}

void require_vertex(const Multigraph& g, Vertex q) {
    if (q >= g.vertex_count()) {
        throw PreconditionError("vertex " + std::to_string(q) + " out of range for " +
                                std::to_string(g.vertex_count()) + " vertices");
    }
}

AbelianGroup graph_route(const Multigraph& g, std::string_view route) {
    if (route == "laplacian") return jacobian_laplacian(g);
    if (route == "edge-lattice") return jacobian_edge_lattice(g, Orientation::standard(g));
    if (route == "dual-cut") {
        if (!is_connected(g)) throw PreconditionError("graph is disconnected");
        if (g.edge_count() == 0) return AbelianGroup();
        return jacobian_dual_cut(incidence_matrix(g, Orientation::standard(g)));
    }
    if (route == "reduced-divisors") return jacobian_by_reduced_divisors(g);
    throw PreconditionError("unknown route '" + std::string(route) + "'");
}

std::string classified_text(const std::vector<ClassifiedObject>& objs) {
    std::string out;
    for (const auto& o : objs) {
        std::string desc = o.description;
        while (!desc.empty() && desc.back() == '\n') desc.pop_back();
        for (auto& ch : desc) {
            if (ch == '\n') ch = ';';
        }
        out += "  " + desc + "  ->  " + o.jacobian.to_string() + '\n';
    }
    return out;
}

json classified_json(const std::vector<ClassifiedObject>& objs) {
    json out = json::array();
    for (const auto& o : objs) out.push_back({{"description", o.description}, {"invariant_factors", factors_json(o.jacobian)}});
    return out;
}

} // namespace

CommandOutput cmd_jacobian(const std::filesystem::path& input, std::string_view route, InputKind kind, bool assume_tu) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "jacobian";
    r.input_digest = digest_of_files({input});
    r.details["route"] = std::string(route);
    std::ostringstream text;

    if (kind == InputKind::matroid) {
        if (route != "dual-cut" && route != "all") {
            throw PreconditionError("matroid inputs support only the dual-cut route");
        }
        r.details["kind"] = "matroid";
        const auto m = load_matroid(input, assume_tu);
        r.group = matroid_jacobian(m);
        text << "Jac(M) = " << group_line(*r.group) << '\n';
    } else {
        r.details["kind"] = "graph";
        const Multigraph g = read_graph_file(input);
        if (route == "all") {
            const auto eq = check_definition_equivalence(g);
            r.group = eq.laplacian;
            r.checks = eq.checks;
            r.details["routes"] = {{"laplacian", factors_json(eq.laplacian)},
                                   {"edge-lattice", factors_json(eq.edge_lattice)},
                                   {"dual-cut", factors_json(eq.dual_cut)},
                                   {"reduced-divisors", eq.reduced_divisors ? factors_json(*eq.reduced_divisors)
                                                                             : json(nullptr)}};
            r.details["agreement"] = eq.checks.passed();
            text << "Jac(G) = " << group_line(*r.group) << '\n';
            text << "  laplacian         " << eq.laplacian.to_string() << '\n';
            text << "  edge-lattice      " << eq.edge_lattice.to_string() << '\n';
            text << "  dual-cut          " << eq.dual_cut.to_string() << '\n';
            text << "  reduced-divisors  " << (eq.reduced_divisors ? eq.reduced_divisors->to_string() : "(skipped)")
                 << '\n';
            text << "agreement: " << (eq.checks.passed() ? "pass" : "FAIL") << '\n';
            text << checks_text(eq.checks);
            if (!eq.checks.passed()) out.exit_code = kMismatch;
        } else {
            r.group = graph_route(g, route);
            text << "Jac(G) = " << group_line(*r.group) << '\n';
        }
    }
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

CommandOutput cmd_reduce(const std::filesystem::path& graph, const std::filesystem::path& divisor, Vertex q) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "reduce";
    r.input_digest = digest_of_files({graph, divisor});
    const Multigraph g = read_graph_file(graph);
    require_vertex(g, q);
    const Divisor d = read_divisor_file(divisor, g.vertex_count());
    const Divisor reduced = q_reduce(g, d, q);
    const BurnResult burn = dhar_burn(g, reduced, q);
    r.checks.add("result is q-reduced", burn.all_burnt && is_q_reduced(g, reduced, q));
    r.details = {{"q", q},
                 {"input", divisor_json(d)},
                 {"reduced", divisor_json(reduced)},
                 {"degree", degree(reduced).get_str()},
                 {"burn_order", burn.order}};
    std::ostringstream text;
    text << "q = " << q << '\n';
    text << "input:   " << divisor_to_text(d) << '\n';
    text << "reduced: " << divisor_to_text(reduced) << '\n';
    text << "burning order: " << vertex_list(burn.order) << '\n';
    text << checks_text(r.checks);
    if (!r.checks.passed()) out.exit_code = kInternalError;
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

CommandOutput cmd_burn(const std::filesystem::path& graph, const std::filesystem::path& divisor, Vertex q) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "burn";
    r.input_digest = digest_of_files({graph, divisor});
    const Multigraph g = read_graph_file(graph);
    require_vertex(g, q);
    const Divisor d = read_divisor_file(divisor, g.vertex_count());
    const BurnResult burn = dhar_burn(g, d, q);
    std::vector<Vertex> unburnt;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!burn.burnt[v]) unburnt.push_back(v);
    }
    const bool reduced = is_q_reduced(g, d, q);
    r.details = {{"q", q},
                 {"divisor", divisor_json(d)},
                 {"burn_order", burn.order},
                 {"unburnt", unburnt},
                 {"all_burnt", burn.all_burnt},
                 {"q_reduced", reduced}};
    std::ostringstream text;
    text << "burning order: " << vertex_list(burn.order) << '\n';
    text << "unburnt: " << (unburnt.empty() ? "(none)" : vertex_list(unburnt)) << '\n';
    text << "all burnt: " << (burn.all_burnt ? "yes" : "no") << '\n';
    text << "q-reduced: " << (reduced ? "yes" : "no") << '\n';
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

CommandOutput cmd_classify(InputKind kind, unsigned k, const SearchBounds& bounds) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "classify";
    ClassificationResult res;
    json bounds_json;
    if (kind == InputKind::graph) {
        bounds_json = {{"max_vertices", bounds.max_vertices}, {"max_edges", bounds.max_edges}};
        res = classify_biconnected_graphs(k, bounds);
    } else {
        if (k != 2) throw PreconditionError("matroid classification supports only k = 2");
        bounds_json = {{"max_rank", bounds.max_rank}, {"max_elements", bounds.max_elements}};
        res = classify_regular_matroids_exp2(bounds);
    }
    r.input_digest = "sha256:" + sha256_hex(res.kind + " k=" + std::to_string(k) + " " + bounds_json.dump());
    r.checks = res.checks;
    r.checks.add("found = expected", res.found == res.expected);
    r.details = {{"kind", res.kind},
                 {"k", k},
                 {"bounds", bounds_json},
                 {"examined", res.examined},
                 {"found", classified_json(res.found)},
                 {"expected", classified_json(res.expected)},
                 {"verdict", res.match ? "match" : "mismatch"}};
    std::ostringstream text;
    text << res.kind << " with exponent <= " << k << " within bounds " << bounds_json.dump() << '\n';
    text << "examined: " << res.examined << '\n';
    text << "found:\n" << classified_text(res.found);
    text << "expected:\n" << classified_text(res.expected);
    text << checks_text(r.checks);
    text << "verdict: " << (res.match ? "match" : "MISMATCH") << '\n';
    if (!res.match) out.exit_code = kMismatch;
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

CommandOutput cmd_project(const std::filesystem::path& input, InputKind kind, bool assume_tu) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "project";
    r.input_digest = digest_of_files({input});
    IntegerMatrix rep;
    if (kind == InputKind::graph) {
        const Multigraph g = read_graph_file(input);
        if (!is_connected(g)) throw PreconditionError("graph is disconnected");
        rep = incidence_matrix(g, Orientation::standard(g));
    } else {
        rep = load_matroid(input, assume_tu).matrix();
    }
    if (rep.cols() == 0) throw PreconditionError("projection needs at least one element");
    const auto dec = projection_and_dual(rep);
    const RationalMatrix& P = dec.projection;
    r.group = lattice_quotient_invariants(dec.cuts, dec.dual_cuts);
    r.checks = check_projection_identities(dec);

    std::map<Integer, std::size_t> histogram;
    json rows = json::array();
    std::ostringstream text;
    text << "P =\n";
    for (std::size_t i = 0; i < P.rows(); ++i) {
        json row = json::array();
        text << " ";
        for (std::size_t j = 0; j < P.cols(); ++j) {
            const std::string s = to_string(P(i, j));
            row.push_back(s);
            text << ' ' << std::setw(5) << s;
            ++histogram[Integer(P(i, j).get_den())];
        }
        rows.push_back(row);
        text << '\n';
    }
    json hist = json::object();
    text << "denominators:";
    for (const auto& [den, count] : histogram) {
        hist[den.get_str()] = count;
        text << "  " << den.get_str() << ": " << count;
    }
    text << '\n';
    text << "Jacobian: " << group_line(*r.group) << '\n';

    const RegularMatroidRep m(rep, TuCheck::waive);
    if (!has_loop(m)) {
        CheckReport diag;
        if (r.group->exponent() <= 2) {
            diag = exponent2_structure_check(m);
            r.details["diagnostics"] = "exponent <= 2 structure";
        } else if (r.group->exponent() == 3) {
            diag = exponent3_entry_diagnostics(m);
            r.details["diagnostics"] = "exponent 3 entries";
        }
        for (const auto& c : diag.checks) r.checks.checks.push_back(c);
    }
    text << checks_text(r.checks);
    r.details["kind"] = kind == InputKind::graph ? "graph" : "matroid";
    r.details["projection"] = rows;
    r.details["denominator_histogram"] = hist;
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

CommandOutput cmd_check_equivalence(const std::filesystem::path& graph) {
    const auto start = Clock::now();
    CommandOutput out;
    Report& r = out.report;
    r.command = "check-equivalence";
    r.input_digest = digest_of_files({graph});
    const Multigraph g = read_graph_file(graph);
    const auto eq = check_definition_equivalence(g);
    r.group = eq.laplacian;
    r.checks = eq.checks;
    for (const auto& c : check_exact_sequence(g).checks) r.checks.checks.push_back(c);
    if (g.edge_count() > 0) {
        const auto dec = projection_and_dual(incidence_matrix(g, Orientation::standard(g)));
        for (const auto& c : check_projection_identities(dec).checks) r.checks.checks.push_back(c);
    }
    r.details = {{"tree_count", eq.tree_count.get_str()}};
    std::ostringstream text;
    text << "Jac(G) = " << group_line(*r.group) << '\n';
    text << "spanning trees: " << eq.tree_count.get_str() << '\n';
    text << checks_text(r.checks);
    if (!r.checks.passed()) out.exit_code = kMismatch;
    r.timing_ms = elapsed_ms(start);
    out.text = text.str();
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jacobians of multigraphs and regular matroids"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    unsigned threads = default_thread_count();
    app.add_flag("--json", as_json, "Emit the JSON report");
    app.add_option("--threads", threads, "Worker threads for classification")->check(CLI::PositiveNumber);

    auto kind_option = [](CLI::App* sub, std::string& kind) {
        sub->add_option("--kind", kind, "Input kind: g (graph) or m (matroid)")
            ->check(CLI::IsMember({"g", "m", "graph", "matroid", "graphs", "matroids"}));
    };
    auto parse_kind = [](const std::string& k) { return k[0] == 'm' ? InputKind::matroid : InputKind::graph; };

    std::string route = "laplacian", kind = "g", file, divisor;
    bool assume_tu = false;
    Vertex q = 0;
    unsigned k = 2;
    SearchBounds bounds;

    auto* jac = app.add_subcommand("jacobian", "Compute Jac(G) or Jac(M)");
    jac->add_option("--route", route, "laplacian | edge-lattice | dual-cut | reduced-divisors | all")
        ->check(CLI::IsMember({"laplacian", "edge-lattice", "dual-cut", "reduced-divisors", "all"}));
    kind_option(jac, kind);
    jac->add_flag("--assume-tu", assume_tu, "Skip the total unimodularity check for matroid input");
    jac->add_option("file", file, "Graph or matroid file")->required();

    auto* red = app.add_subcommand("reduce", "q-reduce a divisor");
    red->add_option("--q", q, "Base vertex")->required();
    red->add_option("graph", file, "Graph file")->required();
    red->add_option("divisor", divisor, "Divisor file")->required();

    auto* burn = app.add_subcommand("burn", "Run Dhar's burning algorithm");
    burn->add_option("--q", q, "Base vertex")->required();
    burn->add_option("graph", file, "Graph file")->required();
    burn->add_option("divisor", divisor, "Divisor file")->required();

    auto* cls = app.add_subcommand("classify", "Bounded classification search");
    kind_option(cls, kind);
    cls->add_option("--k", k, "Exponent bound")->required();
    cls->add_option("--max-vertices", bounds.max_vertices, "Graph search: vertex bound")->capture_default_str();
    cls->add_option("--max-edges", bounds.max_edges, "Graph search: edge bound")->capture_default_str();
    cls->add_option("--max-rank", bounds.max_rank, "Matroid search: rank bound")->capture_default_str();
    cls->add_option("--max-elements", bounds.max_elements, "Matroid search: element bound")->capture_default_str();

    auto* proj = app.add_subcommand("project", "Exact projection onto the cut space");
    kind_option(proj, kind);
    proj->add_flag("--assume-tu", assume_tu, "Skip the total unimodularity check for matroid input");
    proj->add_option("file", file, "Graph or matroid file")->required();

    auto* eqv = app.add_subcommand("check-equivalence", "Compare every Jacobian route");
    eqv->add_option("graph", file, "Graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        CommandOutput result;
        if (*jac) {
            result = cmd_jacobian(file, route, parse_kind(kind), assume_tu);
        } else if (*red) {
            result = cmd_reduce(file, divisor, q);
        } else if (*burn) {
            result = cmd_burn(file, divisor, q);
        } else if (*cls) {
            bounds.threads = threads;
            result = cmd_classify(parse_kind(kind), k, bounds);
        } else if (*proj) {
            result = cmd_project(file, parse_kind(kind), assume_tu);
        } else {
            result = cmd_check_equivalence(file);
        }
        if (as_json) {
            out << to_json(result.report).dump(2) << '\n';
        } else {
            out << result.text;
        }
        return result.exit_code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace critgrp::cli
