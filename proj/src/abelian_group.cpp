#include "critgrp/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "critgrp/exact_linalg.hpp"

namespace critgrp {

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] <= 0) {
            throw PreconditionError("cyclic factor orders must be positive");
        }
        diag(i, i) = orders[i];
    }
    std::vector<Integer> factors;
    for (auto& d : smith_invariants(diag)) {
        if (d > 1) factors.push_back(d);
    }
    return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) {
            throw PreconditionError("invariant factors must be at least 2");
        }
        if (i > 0 && factors[i] % factors[i - 1] != 0) {
            throw PreconditionError("invariant factors must form a divisibility chain");
        }
    }
    return AbelianGroup(std::move(factors));
}

namespace {

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

} // namespace

AbelianGroup AbelianGroup::from_element_orders(std::span<const std::uint64_t> orders) {
    const std::uint64_t n = orders.size();
    if (n == 0) {
        throw PreconditionError("a group has at least one element");
    }
    // For each prime p, |G[p^k]| = p^(sum_i min(lambda_i, k)) determines the
    // partition lambda of the p-primary part.
    std::vector<Integer> factors;
    for (auto [p, mult] : factorize(n)) {
        std::vector<unsigned> at_least; // at_least[k-1] = #cyclic p-factors of order >= p^k
        std::uint64_t prev_count = 1;
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= mult; ++k) {
            pk *= p;
            std::uint64_t count = 0;
            for (auto ord : orders) {
                if (pk % ord == 0) ++count;
            }
            std::uint64_t ratio = count / prev_count;
            unsigned r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            if (r == 0) break;
            at_least.push_back(r);
            prev_count = count;
        }
        // Conjugate partition: the i-th largest p-factor has exponent
        // #{k : at_least[k-1] > i}.
        const unsigned parts = at_least.empty() ? 0 : at_least.front();
        if (factors.size() < parts) {
            factors.resize(parts, Integer(1));
        }
        for (unsigned i = 0; i < parts; ++i) {
            unsigned e = 0;
            for (auto r : at_least) {
                if (r > i) ++e;
            }
            Integer pe;
            mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
            factors[i] *= pe;
        }
    }
    std::sort(factors.begin(), factors.end());
    Integer total = 1;
    for (const auto& f : factors) total *= f;
    if (total != Integer(static_cast<unsigned long>(n))) {
        throw PreconditionError("element orders do not describe an abelian group");
    }
    return from_invariant_factors(std::move(factors));
}

Integer AbelianGroup::order() const {
    Integer out = 1;
    for (const auto& f : factors_) out *= f;
    return out;
}

Integer AbelianGroup::exponent() const {
    return factors_.empty() ? Integer(1) : factors_.back();
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<Integer> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return from_cyclic_orders(all);
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " + ";
        out += "Z/" + factors_[i].get_str();
    }
    return out;
}

} // namespace critgrp
