#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "critgrp/cli.hpp"
#include "critgrp/errors.hpp"

namespace critgrp::cli {

namespace {

using nlohmann::json;

// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings.
json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const json& j, const char* field) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw ParseError(std::string("report: '") + field + "' is not an integer");
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "not-applicable") return CheckStatus::not_applicable;
    throw ParseError("report: unknown check status '" + s + "'");
}

} // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

json to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    if (r.group) {
        json factors = json::array();
        for (const auto& d : r.group->invariant_factors()) factors.push_back(integer_to_json(d));
        j["invariant_factors"] = factors;
        j["exponent"] = integer_to_json(r.group->exponent());
        j["order"] = integer_to_json(r.group->order());
    } else {
        j["invariant_factors"] = nullptr;
        j["exponent"] = nullptr;
        j["order"] = nullptr;
    }
    json checks = json::array();
    for (const auto& c : r.checks.checks) {
        checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["timing_ms"] = r.timing_ms;
    j["details"] = r.details;
    return j;
}

Report report_from_json(const json& j) {
    try {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.input_digest = j.at("input_digest").get<std::string>();
        const json& factors = j.at("invariant_factors");
        if (!factors.is_null()) {
            std::vector<Integer> fs;
            for (const auto& f : factors) fs.push_back(integer_from_json(f, "invariant_factors"));
            AbelianGroup g;
            try {
                g = AbelianGroup::from_invariant_factors(std::move(fs));
            } catch (const PreconditionError& e) {
                throw ParseError(std::string("report: ") + e.what());
            }
            if (integer_from_json(j.at("exponent"), "exponent") != g.exponent()) {
                throw ParseError("report: exponent disagrees with invariant factors");
            }
            if (integer_from_json(j.at("order"), "order") != g.order()) {
                throw ParseError("report: order disagrees with invariant factors");
            }
            r.group = std::move(g);
        }
        for (const auto& c : j.at("checks")) {
            r.checks.checks.push_back({c.at("name").get<std::string>(),
                                       status_from_string(c.at("status").get<std::string>()),
                                       c.at("detail").get<std::string>()});
        }
        r.timing_ms = j.at("timing_ms").get<double>();
        r.details = j.at("details");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

} // namespace critgrp::cli
