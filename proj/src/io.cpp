#include "critgrp/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace critgrp {

namespace {

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.emplace_back(number, line);
    }
    return out;
}

std::vector<Integer> parse_integers(const std::string& text, std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<Integer> out;
    std::string tok;
    while (ss >> tok) {
        Integer z;
        if (z.set_str(tok, 10) != 0) {
            throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
        }
        out.push_back(std::move(z));
    }
    return out;
}

std::size_t as_count(const Integer& z, std::size_t line_no, const char* what) {
    if (z < 0 || !z.fits_ulong_p()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid " + what);
    }
    return z.get_ui();
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

} // namespace

Multigraph parse_graph(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("graph: missing header line 'n m'");
    const auto header = parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2) throw ParseError("graph: header must be 'n m'");
    const std::size_t n = as_count(header[0], lines[0].first, "vertex count");
    const std::size_t m = as_count(header[1], lines[0].first, "edge count");
    if (lines.size() != m + 1) {
        throw ParseError("graph: expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));
    }
    Multigraph g(n);
    for (std::size_t i = 1; i <= m; ++i) {
        const auto [no, text] = lines[i];
        const auto uv = parse_integers(text, no);
        if (uv.size() != 2) throw ParseError("line " + std::to_string(no) + ": edge must be 'u v'");
        const std::size_t u = as_count(uv[0], no, "vertex");
        const std::size_t v = as_count(uv[1], no, "vertex");
        if (u >= n || v >= n) throw ParseError("line " + std::to_string(no) + ": vertex out of range");
        if (u == v) throw ParseError("line " + std::to_string(no) + ": self-loop");
        g.add_edge(u, v);
    }
    return g;
}

Divisor parse_divisor(std::istream& in, std::size_t vertex_count) {
    const auto lines = content_lines(in);
    if (lines.size() != 1) throw ParseError("divisor: expected exactly one line of integers");
    auto values = parse_integers(lines[0].second, lines[0].first);
    if (values.size() != vertex_count) {
        throw ParseError("divisor: expected " + std::to_string(vertex_count) + " values, found " +
                         std::to_string(values.size()));
    }
    return Divisor(std::move(values));
}

IntegerMatrix parse_matroid(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("matroid: missing header line 'r n'");
    const auto header = parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2) throw ParseError("matroid: header must be 'r n'");
    const std::size_t r = as_count(header[0], lines[0].first, "row count");
    const std::size_t n = as_count(header[1], lines[0].first, "column count");
    if (lines.size() != r + 1) {
        throw ParseError("matroid: expected " + std::to_string(r) + " rows, found " +
                         std::to_string(lines.size() - 1));
    }
    IntegerMatrix a(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        const auto [no, text] = lines[i + 1];
        const auto row = parse_integers(text, no);
        if (row.size() != n) throw ParseError("line " + std::to_string(no) + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] < -1 || row[j] > 1) {
                throw ParseError("line " + std::to_string(no) + ": entries must be -1, 0 or 1");
            }
            a(i, j) = row[j];
        }
    }
    return a;
}

Multigraph read_graph_file(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_graph(in);
}

Divisor read_divisor_file(const std::filesystem::path& path, std::size_t vertex_count) {
    auto in = open(path);
    return parse_divisor(in, vertex_count);
}

IntegerMatrix read_matroid_file(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_matroid(in);
}

std::string read_file(const std::filesystem::path& path) {
    auto in = open(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string graph_to_text(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string matrix_to_text(const IntegerMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

std::string divisor_to_text(const Divisor& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ' ';
        out += d[i].get_str();
    }
    return out;
}

} // namespace critgrp
