#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "critgrp/matrix.hpp"

namespace critgrp {

/// A finite abelian group in invariant-factor form d1 | d2 | ... | dk with
/// every di >= 2. The trivial group has no factors.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Builds the group Z/a1 + ... + Z/an for arbitrary positive ai and
    /// brings it to invariant-factor form. Factors equal to 1 vanish.
    static AbelianGroup from_cyclic_orders(std::span<const Integer> orders);

    /// Accepts an already canonical list; throws if the divisibility chain
    /// or the >= 2 bound is violated.
    static AbelianGroup from_invariant_factors(std::vector<Integer> factors);

    /// Recovers the group from the multiset of element orders of a finite
    /// abelian group (one entry per element).
    static AbelianGroup from_element_orders(std::span<const std::uint64_t> orders);

    const std::vector<Integer>& invariant_factors() const { return factors_; }
    Integer order() const;
    /// Largest invariant factor; 1 for the trivial group.
    Integer exponent() const;
    bool is_trivial() const { return factors_.empty(); }

    AbelianGroup direct_sum(const AbelianGroup& other) const;

    /// "Z/3 + Z/3", or "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    explicit AbelianGroup(std::vector<Integer> factors) : factors_(std::move(factors)) {}
    std::vector<Integer> factors_;
};

} // namespace critgrp
