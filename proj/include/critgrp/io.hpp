#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "critgrp/graph.hpp"
#include "critgrp/matrix.hpp"
#include "critgrp/sandpile.hpp"

namespace critgrp {

// Text formats. Blank lines and lines whose first non-blank character is
// '#' are ignored everywhere.
//
//   graph:    "n m", then m lines "u v" (0-based vertices)
//   divisor:  one line of n integers
//   matroid:  "r n", then r lines of n entries from {-1, 0, 1}
//
// Malformed input raises ParseError.

Multigraph parse_graph(std::istream& in);
Divisor parse_divisor(std::istream& in, std::size_t vertex_count);
IntegerMatrix parse_matroid(std::istream& in);

Multigraph read_graph_file(const std::filesystem::path& path);
Divisor read_divisor_file(const std::filesystem::path& path, std::size_t vertex_count);
IntegerMatrix read_matroid_file(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

std::string graph_to_text(const Multigraph& g);
std::string matrix_to_text(const IntegerMatrix& a); // "r n" header + rows
std::string divisor_to_text(const Divisor& d);

} // namespace critgrp
