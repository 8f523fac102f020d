#include "critgrp/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "critgrp/exact_linalg.hpp"
#include "critgrp/lattice_jacobian.hpp"

namespace critgrp {

namespace {

// All k-subsets of {0..n-1} in lexicographic order, as index vectors.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_cap(std::size_t elements, std::size_t cap, const char* what) {
    if (elements > cap) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(elements) + " elements exceeds cap " +
                          std::to_string(cap));
    }
}

void require_loopless(const RegularMatroidRep& m) {
    if (has_loop(m)) throw PreconditionError("matroid has a loop");
}

bool is_half_integral(const Rational& q) {
    return q.get_den() == 1 || q.get_den() == 2;
}

} // namespace

bool is_totally_unimodular(const IntegerMatrix& a, std::size_t cap) {
    const std::size_t kmax = std::min(a.rows(), a.cols());
    if (kmax > cap) {
        throw CapExceeded("total unimodularity check: submatrix size " + std::to_string(kmax) + " exceeds cap " +
                          std::to_string(cap));
    }
    for (const auto& x : a.data()) {
        if (x < -1 || x > 1) return false;
    }
    bool ok = true;
    for (std::size_t k = 2; k <= kmax && ok; ++k) {
        for_each_combination(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (!ok) return;
            const IntegerMatrix sub_rows = a.select_rows(rows);
            for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (!ok) return;
                const Integer det = determinant(sub_rows.select_columns(cols));
                if (det < -1 || det > 1) ok = false;
            });
        });
    }
    return ok;
}

RegularMatroidRep::RegularMatroidRep(IntegerMatrix matrix, TuCheck tu) : matrix_(std::move(matrix)) {
    for (const auto& x : matrix_.data()) {
        if (x < -1 || x > 1) throw PreconditionError("representation entries must lie in {-1, 0, 1}");
    }
    if (tu == TuCheck::verify && !is_totally_unimodular(matrix_)) {
        throw PreconditionError("representation is not totally unimodular");
    }
}

std::vector<ElementSet> circuits(const RegularMatroidRep& m, std::size_t cap) {
    const std::size_t n = m.element_count();
    check_cap(n, cap, "circuits");
    std::vector<ElementSet> out;
    std::vector<std::uint32_t> masks;
    for (std::size_t size = 1; size <= n; ++size) {
        for_each_combination(n, size, [&](const std::vector<std::size_t>& s) {
            std::uint32_t mask = 0;
            for (auto i : s) mask |= std::uint32_t{1} << i;
            for (auto c : masks) {
                if ((c & mask) == c) return; // contains a smaller circuit
            }
            if (rank(m.matrix().select_columns(s)) < size) {
                out.push_back(s);
                masks.push_back(mask);
            }
        });
    }
    return out;
}

bool is_connected_matroid(const RegularMatroidRep& m, std::size_t cap) {
    const std::size_t n = m.element_count();
    if (n <= 1) return true;
    std::vector<std::vector<bool>> together(n, std::vector<bool>(n, false));
    for (const auto& c : circuits(m, cap)) {
        for (auto i : c) {
            for (auto j : c) together[i][j] = true;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!together[i][j]) return false;
        }
    }
    return true;
}

bool has_loop(const RegularMatroidRep& m) {
    const auto& a = m.matrix();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (a(i, j) != 0) zero = false;
        }
        if (zero) return true;
    }
    return false;
}

Integer bases_count(const RegularMatroidRep& m, std::size_t cap) {
    const std::size_t n = m.element_count();
    check_cap(n, cap, "bases_count");
    const std::size_t r = rank(m.matrix());
    Integer count = 0;
    for_each_combination(n, r, [&](const std::vector<std::size_t>& s) {
        if (rank(m.matrix().select_columns(s)) == r) ++count;
    });
    return count;
}

AbelianGroup matroid_jacobian(const RegularMatroidRep& m) {
    return jacobian_dual_cut(m.matrix());
}

CheckReport exponent2_structure_check(const RegularMatroidRep& m) {
    require_loopless(m);
    CheckReport report;
    const EdgeSpaceDecomposition dec = projection_and_dual(m.matrix());
    const AbelianGroup jac = lattice_quotient_invariants(dec.cuts, dec.dual_cuts);
    if (jac.exponent() > 2) {
        report.add_not_applicable("exponent <= 2", "Jacobian is " + jac.to_string());
        return report;
    }
    const RationalMatrix& P = dec.projection;
    const std::size_t n = m.element_count();

    bool denominators = true;
    for (const auto& x : P.data()) {
        if (!is_half_integral(x)) denominators = false;
    }
    report.add("denominators <= 2", denominators);

    // 2x lies in B_I for every generator x of B_I^#.
    const RationalMatrix dual = dec.dual_cuts.basis();
    bool doubled_in_cuts = true;
    for (std::size_t j = 0; j < dual.cols(); ++j) {
        std::vector<Rational> x = dual.column(j);
        for (auto& v : x) v *= 2;
        if (!dec.cuts.contains(x)) doubled_in_cuts = false;
    }
    report.add("2 * dual generators lie in B_I", doubled_in_cuts);

    if (n == 1) {
        report.add("single element", true);
        return report;
    }
    if (!is_connected_matroid(m)) {
        report.add_not_applicable("connected structure", "matroid is not connected");
        return report;
    }

    bool entries = true;
    for (const auto& x : P.data()) {
        if (!(x == 0 || x == Rational(1, 2) || x == Rational(-1, 2))) entries = false;
    }
    report.add("entries in {0, 1/2, -1/2}", entries);

    bool diagonal = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (P(i, i) != Rational(1, 2)) diagonal = false;
    }
    report.add("diagonal entries 1/2", diagonal);

    bool two_per_row = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nz = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (P(i, j) != 0) ++nz;
        }
        if (nz != 2) two_per_row = false;
    }
    report.add("exactly two nonzero entries per row", two_per_row);
    report.add("P symmetric", P.transpose() == P);

    // Partners: P(e_i + s e_j) = 0 with s = -2 P_ij, and {i, j} a circuit.
    bool paired = two_per_row;
    if (two_per_row) {
        const auto circs = circuits(m);
        for (std::size_t i = 0; i < n && paired; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || P(i, j) == 0) continue;
                const Rational s = -2 * P(i, j);
                for (std::size_t r = 0; r < n; ++r) {
                    if (P(r, i) + s * P(r, j) != 0) paired = false;
                }
                ElementSet pair{std::min(i, j), std::max(i, j)};
                if (std::find(circs.begin(), circs.end(), pair) == circs.end()) paired = false;
            }
        }
    }
    report.add("paired elements form a 2-circuit", paired);
    report.add("at most two elements", n <= 2, std::to_string(n) + " elements");
    return report;
}

CheckReport exponent3_entry_diagnostics(const RegularMatroidRep& m) {
    require_loopless(m);
    CheckReport report;
    const EdgeSpaceDecomposition dec = projection_and_dual(m.matrix());
    const AbelianGroup jac = lattice_quotient_invariants(dec.cuts, dec.dual_cuts);
    if (jac.exponent() != 3) {
        report.add_not_applicable("exponent = 3", "Jacobian is " + jac.to_string());
        return report;
    }
    const RationalMatrix& P = dec.projection;
    const std::size_t n = m.element_count();
    const Rational third(1, 3), two_thirds(2, 3);

    bool entries = true;
    for (const auto& x : P.data()) {
        if (!(x == 0 || abs(x) == third || abs(x) == two_thirds)) entries = false;
    }
    report.add("entries in {0, +-1/3, +-2/3}", entries);

    bool diagonal = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (P(i, i) != third && P(i, i) != two_thirds) diagonal = false;
    }
    report.add("diagonal entries in {1/3, 2/3}", diagonal);

    bool three = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t row_nz = 0, col_nz = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (P(i, j) != 0) ++row_nz;
            if (P(j, i) != 0) ++col_nz;
        }
        if (row_nz != 3 || col_nz != 3) three = false;
    }
    report.add("three nonzero entries per row and column", three);

    bool off_diagonal = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && P(i, j) != 0 && abs(P(i, j)) != third) off_diagonal = false;
        }
    }
    report.add("off-diagonal entries +-1/3", off_diagonal);
    return report;
}

} // namespace critgrp
