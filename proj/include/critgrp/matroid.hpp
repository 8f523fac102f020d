#pragma once

#include <cstddef>
#include <vector>

#include "critgrp/abelian_group.hpp"
#include "critgrp/check_report.hpp"
#include "critgrp/matrix.hpp"

namespace critgrp {

inline constexpr std::size_t kTotalUnimodularityCap = 6; // on min(rows, cols)
inline constexpr std::size_t kElementCap = 12;

/// Brute force over every square submatrix. Throws CapExceeded when
/// min(rows, cols) > cap.
bool is_totally_unimodular(const IntegerMatrix& a, std::size_t cap = kTotalUnimodularityCap);

enum class TuCheck { verify, waive };

/// A regular matroid given by a totally unimodular representation over R.
/// Elements are the columns.
class RegularMatroidRep {
public:
    explicit RegularMatroidRep(IntegerMatrix matrix, TuCheck tu = TuCheck::verify);

    const IntegerMatrix& matrix() const { return matrix_; }
    std::size_t element_count() const { return matrix_.cols(); }

private:
    IntegerMatrix matrix_;
};

using ElementSet = std::vector<std::size_t>;

/// Minimal linearly dependent column sets, ordered by size then lexicographically.
std::vector<ElementSet> circuits(const RegularMatroidRep& m, std::size_t cap = kElementCap);

/// Every pair of distinct elements lies in a common circuit.
bool is_connected_matroid(const RegularMatroidRep& m, std::size_t cap = kElementCap);

bool has_loop(const RegularMatroidRep& m);

Integer bases_count(const RegularMatroidRep& m, std::size_t cap = kElementCap);

AbelianGroup matroid_jacobian(const RegularMatroidRep& m);

/// Structure forced on P when Jac(M) has exponent <= 2 (see README).
CheckReport exponent2_structure_check(const RegularMatroidRep& m);

/// Conditions on P observed for exponent-3 Jacobians; diagnostic only.
CheckReport exponent3_entry_diagnostics(const RegularMatroidRep& m);

} // namespace critgrp
