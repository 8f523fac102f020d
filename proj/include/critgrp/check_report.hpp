#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace critgrp {

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Named conditions with pass / fail / not-applicable outcomes.
struct CheckReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
    }
    void add_not_applicable(std::string name, std::string detail = {}) {
        checks.push_back({std::move(name), CheckStatus::not_applicable, std::move(detail)});
    }
    // No check failed (not-applicable entries do not count against).
    bool passed() const {
        for (const auto& c : checks) {
            if (c.status == CheckStatus::fail) return false;
        }
        return true;
    }
    bool applicable() const {
        for (const auto& c : checks) {
            if (c.status != CheckStatus::not_applicable) return true;
        }
        return false;
    }
    const CheckResult* find(std::string_view name) const {
        for (const auto& c : checks) {
            if (c.name == name) return &c;
        }
        return nullptr;
    }
};

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    }
    return "unknown";
}

} // namespace critgrp
