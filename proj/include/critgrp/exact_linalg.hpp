#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "critgrp/abelian_group.hpp"
#include "critgrp/matrix.hpp"

namespace critgrp {

// A = U * S * V with U, V unimodular and S diagonal. The diagonal of S is
// nonnegative, each entry divides the next, and zeros come last.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix S;
    IntegerMatrix V;
    std::vector<Integer> invariant_factors; // diagonal of S, length min(rows, cols)
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Diagonal of the Smith form only (no transforms tracked).
std::vector<Integer> smith_invariants(const IntegerMatrix& a);

/// Column-style Hermite normal form of the lattice spanned by the columns
/// of `a`. The result has one column per unit of rank. Column j has its
/// pivot at row p_j with p_0 < p_1 < ...; entries above a pivot are zero,
/// pivots are positive, and entries of earlier columns in a pivot row lie in
/// [0, pivot). Two matrices span the same column lattice iff their HNFs are
/// equal.
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

/// A * R = H where R is unimodular and H is `a` reduced by column operations
/// to Hermite form: the first `rank` columns of H are the HNF, the rest are
/// zero. Columns rank.. of R therefore span the integer kernel of `a`.
struct ColumnEchelon {
    IntegerMatrix H;
    IntegerMatrix R;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntegerMatrix& a);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const IntegerMatrix& a);

/// Indices of the greedy (leftmost) maximal linearly independent set of
/// columns.
std::vector<std::size_t> pivot_columns(const IntegerMatrix& a);

/// Determinant of a square matrix by Bareiss elimination.
Integer determinant(const IntegerMatrix& a);

/// Solves A * X = det(A) * B for square nonsingular A without leaving the
/// integers. Returns {X, det(A)}, so the rational solution is X / det(A).
struct FractionFreeSolution {
    IntegerMatrix numerators;
    Integer denominator;
};
FractionFreeSolution solve_fraction_free(const IntegerMatrix& a, const IntegerMatrix& b);

/// Some integer x with A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b);

/// A lattice in Q^ambient_dim: the Z-span of the columns of
/// `generators / denominator`. Canonical lattices have linearly independent
/// generator columns in Hermite normal form and the smallest denominator
/// that keeps the generators integral.
class Lattice {
public:
    Lattice() = default;
    Lattice(IntegerMatrix generators, Integer denominator = 1);

    /// The lattice spanned by the columns of a rational matrix.
    static Lattice from_rational_generators(const RationalMatrix& gens);
    static Lattice standard(std::size_t dim);

    std::size_t ambient_dim() const { return generators_.rows(); }
    std::size_t generator_count() const { return generators_.cols(); }
    std::size_t rank() const;
    const IntegerMatrix& generators() const { return generators_; }
    const Integer& denominator() const { return denominator_; }
    RationalMatrix basis() const;

    Lattice canonical() const;
    bool contains(const std::vector<Rational>& x) const;

    /// Same set of points (compares canonical forms).
    bool same_lattice(const Lattice& other) const;

private:
    IntegerMatrix generators_;
    Integer denominator_ = 1;
};

/// Integer kernel {x in Z^cols : A x = 0}, saturated, in canonical form.
Lattice integer_kernel_basis(const IntegerMatrix& a);

/// Exact orthogonal projection of Q^cols onto the row space of `a`:
/// P = M^t (M M^t)^{-1} M for a row basis M of `a`.
RationalMatrix row_space_projection(const IntegerMatrix& a);

/// super / sub for lattices of equal rank with sub contained in super.
/// Throws PreconditionError when the ranks differ, the bases are dependent,
/// or sub is not contained in super.
AbelianGroup lattice_quotient_invariants(const Lattice& sub, const Lattice& super);

} // namespace critgrp
