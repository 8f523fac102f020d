#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "critgrp/abelian_group.hpp"
#include "critgrp/check_report.hpp"
#include "critgrp/classify.hpp"
#include "critgrp/graph.hpp"

namespace critgrp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kParseError = 2,
    kPreconditionError = 3,
    kMismatch = 4,
    kCapExceeded = 5,
};

/// Result of one command. `group` is set for commands that compute a
/// Jacobian; exponent and order are derived from it when serialized.
struct Report {
    std::string command;
    std::string input_digest; // "sha256:<hex>" of the input bytes
    std::optional<AbelianGroup> group;
    CheckReport checks;
    double timing_ms = 0;
    nlohmann::json details = nlohmann::json::object();

    friend bool operator==(const Report& a, const Report& b) {
        return a.command == b.command && a.input_digest == b.input_digest && a.group == b.group &&
               a.checks.checks == b.checks.checks && a.timing_ms == b.timing_ms && a.details == b.details;
    }
};

nlohmann::json to_json(const Report& r);
/// Inverse of to_json. Throws ParseError on schema violations, including an
/// exponent or order that disagrees with the invariant factors.
Report report_from_json(const nlohmann::json& j);

std::string sha256_hex(std::string_view bytes);

enum class InputKind { graph, matroid };

struct CommandOutput {
    Report report;
    std::string text; // human-readable rendering
    int exit_code = kSuccess;
};

/// route: laplacian | edge-lattice | dual-cut | reduced-divisors | all.
/// Matroid inputs accept dual-cut and all.
CommandOutput cmd_jacobian(const std::filesystem::path& input, std::string_view route, InputKind kind,
                           bool assume_tu = false);
CommandOutput cmd_reduce(const std::filesystem::path& graph, const std::filesystem::path& divisor, Vertex q);
CommandOutput cmd_burn(const std::filesystem::path& graph, const std::filesystem::path& divisor, Vertex q);
CommandOutput cmd_classify(InputKind kind, unsigned k, const SearchBounds& bounds);
CommandOutput cmd_project(const std::filesystem::path& input, InputKind kind, bool assume_tu = false);
CommandOutput cmd_check_equivalence(const std::filesystem::path& graph);

/// Full command-line entry point; maps library errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace critgrp::cli
