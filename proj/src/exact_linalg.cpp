#include "critgrp/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace critgrp {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer exact_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// Fraction-free row echelon (Bareiss). Returns pivot columns; `m` is
// overwritten with the echelon form and `swaps` counts row exchanges.
std::vector<std::size_t> bareiss_echelon(IntegerMatrix& m, std::size_t& swaps) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    swaps = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            ++swaps;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

// ---------------------------------------------------------------------------
// Smith normal form

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // Invariant throughout: a == U * S * V.
    IntegerMatrix S = a;
    IntegerMatrix U = IntegerMatrix::identity(m);
    IntegerMatrix V = IntegerMatrix::identity(n);

    // Row op on S: row i += k row j  =>  U col j -= k U col i.
    auto row_add = [&](std::size_t i, std::size_t j, const Integer& k) {
        S.add_row_multiple(i, j, k);
        U.add_col_multiple(j, i, -k);
    };
    // Column op on S: col i += k col j  =>  V row j -= k V row i.
    auto col_add = [&](std::size_t i, std::size_t j, const Integer& k) {
        S.add_col_multiple(i, j, k);
        V.add_row_multiple(j, i, -k);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        S.swap_rows(i, j);
        U.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        S.swap_cols(i, j);
        V.swap_rows(i, j);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Pivot on the nonzero entry of least absolute value.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == m) break; // remaining block is zero
            row_swap(t, pi);
            col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                row_add(i, t, -trunc_div(S(i, t), S(t, t)));
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                col_add(j, t, -trunc_div(S(t, j), S(t, t)));
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Row t and column t are clear; enforce divisibility of the rest.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (S(i, j) % S(t, t) != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == m) break;
            row_add(t, bad, Integer(1));
        }
        if (t < m && t < n && S(t, t) < 0) {
            S.negate_row(t);
            U.negate_col(t);
        }
    }

    SmithDecomposition out{std::move(U), std::move(S), std::move(V), {}};
    for (std::size_t t = 0; t < steps; ++t) {
        out.invariant_factors.push_back(out.S(t, t));
    }
    return out;
}

std::vector<Integer> smith_invariants(const IntegerMatrix& a) {
    return smith_normal_form(a).invariant_factors;
}

// ---------------------------------------------------------------------------
// Hermite normal form

ColumnEchelon column_echelon(const IntegerMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ColumnEchelon out{a, IntegerMatrix::identity(n), 0, {}};
    IntegerMatrix& H = out.H;
    IntegerMatrix& R = out.R;

    auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
        H.add_col_multiple(dst, src, k);
        R.add_col_multiple(dst, src, k);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        H.swap_cols(x, y);
        R.swap_cols(x, y);
    };

    std::size_t k = 0;
    for (std::size_t i = 0; i < m && k < n; ++i) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = k; c < n; ++c) {
                if (H(i, c) != 0 && (best == n || abs(H(i, c)) < abs(H(i, best)))) best = c;
            }
            if (best == n) break;
            col_swap(k, best);
            bool done = true;
            for (std::size_t c = k + 1; c < n; ++c) {
                if (H(i, c) == 0) continue;
                col_add(c, k, -trunc_div(H(i, c), H(i, k)));
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (k >= n || H(i, k) == 0) continue;
        if (H(i, k) < 0) {
            H.negate_col(k);
            R.negate_col(k);
        }
        for (std::size_t c = 0; c < k; ++c) {
            Integer q = floor_div(H(i, c), H(i, k));
            if (q != 0) col_add(c, k, -q);
        }
        out.pivot_rows.push_back(i);
        ++k;
    }
    out.rank = k;
    return out;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
    ColumnEchelon e = column_echelon(a);
    std::vector<std::size_t> keep(e.rank);
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    return e.H.select_columns(keep);
}

// ---------------------------------------------------------------------------
// Elimination helpers

std::vector<std::size_t> pivot_columns(const IntegerMatrix& a) {
    IntegerMatrix m = a;
    std::size_t swaps = 0;
    return bareiss_echelon(m, swaps);
}

std::size_t rank(const IntegerMatrix& a) {
    return pivot_columns(a).size();
}

Integer determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    if (a.rows() == 0) return 1;
    IntegerMatrix m = a;
    std::size_t swaps = 0;
    auto pivots = bareiss_echelon(m, swaps);
    if (pivots.size() < a.rows()) return 0;
    Integer det = m(a.rows() - 1, a.cols() - 1);
    return swaps % 2 ? Integer(-det) : det;
}

FractionFreeSolution solve_fraction_free(const IntegerMatrix& a, const IntegerMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) {
        throw PreconditionError("solve_fraction_free: dimension mismatch");
    }
    const std::size_t k = b.cols();
    IntegerMatrix aug(n, n + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
    }
    std::size_t swaps = 0;
    auto pivots = bareiss_echelon(aug, swaps);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw PreconditionError("solve_fraction_free: singular system");
    }
    Integer det = n == 0 ? Integer(1) : aug(n - 1, n - 1);
    // aug is now upper triangular with Bareiss-scaled rows; back substitution
    // on det * x stays integral.
    IntegerMatrix x(n, k);
    for (std::size_t col = 0; col < k; ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            Integer acc = det * aug(ii, n + col);
            for (std::size_t j = ii + 1; j < n; ++j) {
                acc -= aug(ii, j) * x(j, col);
            }
            x(ii, col) = exact_div(acc, aug(ii, ii));
        }
    }
    if (det < 0) {
        det = -det;
        for (std::size_t i = 0; i < n; ++i) x.negate_row(i);
    }
    return {std::move(x), std::move(det)};
}

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b) {
    if (b.size() != a.rows()) {
        throw PreconditionError("solve_integer: right-hand side length mismatch");
    }
    ColumnEchelon e = column_echelon(a);
    // H y = b with H lower-echelon: solve pivot rows in order.
    std::vector<Integer> y(a.cols(), Integer(0));
    for (std::size_t k = 0; k < e.rank; ++k) {
        const std::size_t i = e.pivot_rows[k];
        Integer rest = b[i];
        for (std::size_t c = 0; c < k; ++c) rest -= e.H(i, c) * y[c];
        if (rest % e.H(i, k) != 0) return std::nullopt;
        y[k] = exact_div(rest, e.H(i, k));
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer s = 0;
        for (std::size_t c = 0; c < e.rank; ++c) s += e.H(i, c) * y[c];
        if (s != b[i]) return std::nullopt;
    }
    std::vector<Integer> x(a.cols(), Integer(0));
    for (std::size_t r = 0; r < a.cols(); ++r) {
        for (std::size_t c = 0; c < e.rank; ++c) x[r] += e.R(r, c) * y[c];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Lattices

Lattice::Lattice(IntegerMatrix generators, Integer denominator)
    : generators_(std::move(generators)), denominator_(std::move(denominator)) {
    if (denominator_ <= 0) {
        throw PreconditionError("lattice denominator must be positive");
    }
}

Lattice Lattice::from_rational_generators(const RationalMatrix& gens) {
    Integer den = 1;
    for (const auto& q : gens.data()) den = lcm(den, q.get_den());
    IntegerMatrix scaled(gens.rows(), gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i) {
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            const Rational& q = gens(i, j);
            scaled(i, j) = q.get_num() * exact_div(den, q.get_den());
        }
    }
    return Lattice(std::move(scaled), den).canonical();
}

Lattice Lattice::standard(std::size_t dim) {
    return Lattice(IntegerMatrix::identity(dim));
}

std::size_t Lattice::rank() const {
    return critgrp::rank(generators_);
}

RationalMatrix Lattice::basis() const {
    RationalMatrix out(generators_.rows(), generators_.cols());
    for (std::size_t i = 0; i < generators_.rows(); ++i) {
        for (std::size_t j = 0; j < generators_.cols(); ++j) {
            out(i, j) = make_rational(generators_(i, j), denominator_);
        }
    }
    return out;
}

Lattice Lattice::canonical() const {
    IntegerMatrix h = hermite_normal_form(generators_);
    Integer g = denominator_;
    for (const auto& v : h.data()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 1) {
        for (std::size_t i = 0; i < h.rows(); ++i) {
            for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = exact_div(h(i, j), g);
        }
    }
    Lattice out;
    out.generators_ = std::move(h);
    out.denominator_ = exact_div(denominator_, g);
    return out;
}

bool Lattice::contains(const std::vector<Rational>& x) const {
    if (x.size() != ambient_dim()) return false;
    // denominator * x must be an integer combination of the generators.
    std::vector<Integer> target(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rational scaled = x[i] * Rational(denominator_);
        if (scaled.get_den() != 1) return false;
        target[i] = scaled.get_num();
    }
    return solve_integer(generators_, target).has_value();
}

bool Lattice::same_lattice(const Lattice& other) const {
    Lattice a = canonical();
    Lattice b = other.canonical();
    return a.generators_ == b.generators_ && a.denominator_ == b.denominator_;
}

Lattice integer_kernel_basis(const IntegerMatrix& a) {
    ColumnEchelon e = column_echelon(a);
    std::vector<std::size_t> kernel_cols;
    for (std::size_t c = e.rank; c < a.cols(); ++c) kernel_cols.push_back(c);
    return Lattice(e.R.select_columns(kernel_cols)).canonical();
}

RationalMatrix row_space_projection(const IntegerMatrix& a) {
    const std::size_t m = a.cols();
    auto basis_rows = pivot_columns(a.transpose());
    if (basis_rows.empty()) return RationalMatrix(m, m);
    IntegerMatrix M = a.select_rows(basis_rows);
    IntegerMatrix gram = M * M.transpose();
    auto sol = solve_fraction_free(gram, M); // gram * N = det * M
    IntegerMatrix num = M.transpose() * sol.numerators;
    RationalMatrix P(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) P(i, j) = make_rational(num(i, j), sol.denominator);
    }
    return P;
}

AbelianGroup lattice_quotient_invariants(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_dim() != super.ambient_dim()) {
        throw PreconditionError("lattices live in different ambient spaces");
    }
    const std::size_t r = super.generator_count();
    if (sub.generator_count() != r || sub.rank() != r || super.rank() != r) {
        throw PreconditionError("lattice quotient needs two full-rank bases of equal rank");
    }
    const Integer den = lcm(sub.denominator(), super.denominator());
    IntegerMatrix As = sub.generators();
    IntegerMatrix Ap = super.generators();
    const Integer fs = exact_div(den, sub.denominator());
    const Integer fp = exact_div(den, super.denominator());
    for (std::size_t i = 0; i < As.rows(); ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            As(i, j) *= fs;
            Ap(i, j) *= fp;
        }
    }
    // Coordinates of sub's basis in super's basis, from r independent rows.
    auto rows = pivot_columns(Ap.transpose());
    auto sol = solve_fraction_free(Ap.select_rows(rows), As.select_rows(rows));
    IntegerMatrix change(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (sol.numerators(i, j) % sol.denominator != 0) {
                throw PreconditionError("sub is not a sublattice: non-integral coordinates");
            }
            change(i, j) = exact_div(sol.numerators(i, j), sol.denominator);
        }
    }
    if (!(Ap * change == As)) {
        throw PreconditionError("sub does not lie in the span of super");
    }
    std::vector<Integer> factors;
    for (auto& d : smith_invariants(change)) {
        if (d == 0) throw InternalError("rank-deficient change of basis");
        if (d > 1) factors.push_back(d);
    }
    return AbelianGroup::from_invariant_factors(std::move(factors));
}

} // namespace critgrp
