#include <gtest/gtest.h>

#include <random>

#include "critgrp/errors.hpp"
#include "critgrp/exact_linalg.hpp"
#include "oracles.hpp"

namespace critgrp {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    return std::vector<Integer>(v.begin(), v.end());
}

bool is_unimodular(const IntegerMatrix& m) {
    Integer d = oracle::det_by_cofactors(m);
    return d == 1 || d == -1;
}

TEST(SmithNormalForm, Identity) {
    auto s = smith_normal_form(IntegerMatrix::identity(3));
    EXPECT_EQ(s.S, IntegerMatrix::identity(3));
    EXPECT_EQ(s.invariant_factors, ints({1, 1, 1}));
}

TEST(SmithNormalForm, DiagTwoThree) {
    IntegerMatrix a{{2, 0}, {0, 3}};
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.S, (IntegerMatrix{{1, 0}, {0, 6}}));
    EXPECT_EQ(s.U * s.S * s.V, a);
}

TEST(SmithNormalForm, ZeroOneByOne) {
    auto s = smith_normal_form(IntegerMatrix{{0}});
    EXPECT_EQ(s.S, (IntegerMatrix{{0}}));
    EXPECT_EQ(s.invariant_factors, ints({0}));
}

TEST(SmithNormalForm, RankDeficientKeepsZeros) {
    IntegerMatrix a{{2, 4}, {1, 2}, {3, 6}};
    auto s = smith_normal_form(a);
    EXPECT_EQ(s.invariant_factors, ints({1, 0}));
    EXPECT_EQ(s.U * s.S * s.V, a);
}

TEST(SmithNormalForm, RandomMatricesMatchMinorsOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, r, c, -6, 6);
        auto s = smith_normal_form(a);
        ASSERT_EQ(s.U * s.S * s.V, a);
        ASSERT_TRUE(is_unimodular(s.U));
        ASSERT_TRUE(is_unimodular(s.V));
        for (std::size_t i = 0; i < s.S.rows(); ++i) {
            for (std::size_t j = 0; j < s.S.cols(); ++j) {
                if (i != j) ASSERT_EQ(s.S(i, j), 0);
            }
        }
        ASSERT_EQ(s.invariant_factors, oracle::smith_by_minors(a));
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            const auto& d = s.invariant_factors[i];
            const auto& e = s.invariant_factors[i + 1];
            ASSERT_GE(d, 0);
            if (d == 0) {
                ASSERT_EQ(e, 0);
            } else {
                ASSERT_EQ(e % d, 0);
            }
        }
        ASSERT_EQ(smith_invariants(a), s.invariant_factors);
    }
}

TEST(HermiteNormalForm, AlreadyCanonical) {
    IntegerMatrix a{{2, 0}, {0, 2}};
    EXPECT_EQ(hermite_normal_form(a), a);
}

TEST(HermiteNormalForm, IndexTwoSublattice) {
    IntegerMatrix a{{1, 1}, {1, -1}};
    auto h = hermite_normal_form(a);
    ASSERT_EQ(h.cols(), 2u);
    EXPECT_EQ(h(0, 1), 0);
    Integer d = h(0, 0) * h(1, 1);
    EXPECT_EQ(d, 2);
    EXPECT_EQ(h, (IntegerMatrix{{1, 0}, {1, 2}}));
}

TEST(HermiteNormalForm, ZeroMatrixHasEmptyBasis) {
    auto h = hermite_normal_form(IntegerMatrix(3, 2));
    EXPECT_EQ(h.rows(), 3u);
    EXPECT_EQ(h.cols(), 0u);
}

TEST(HermiteNormalForm, CanonicalUnderColumnOperations) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, r, c, -5, 5);
        auto h = hermite_normal_form(a);
        ASSERT_EQ(h.cols(), oracle::rank_over_q(a));
        // A random unimodular column transform must not change the HNF.
        IntegerMatrix b = a;
        for (int k = 0; k < 6 && c > 1; ++k) {
            std::size_t i = rng() % c, j = rng() % c;
            if (i == j) continue;
            b.add_col_multiple(i, j, Integer(static_cast<long>(rng() % 5) - 2));
            if (rng() % 2) b.swap_cols(i, j);
        }
        ASSERT_EQ(hermite_normal_form(b), h);
        // Pivot profile: row of first nonzero strictly increases, pivots
        // positive, earlier columns reduced in pivot rows.
        std::size_t prev = 0;
        for (std::size_t j = 0; j < h.cols(); ++j) {
            std::size_t p = 0;
            while (h(p, j) == 0) ++p;
            if (j > 0) ASSERT_GT(p, prev);
            ASSERT_GT(h(p, j), 0);
            for (std::size_t k = 0; k < j; ++k) {
                ASSERT_GE(h(p, k), 0);
                ASSERT_LT(h(p, k), h(p, j));
            }
            prev = p;
        }
    }
}

TEST(ColumnEchelon, TransformIsUnimodularAndKernelTail) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, r, c, -4, 4);
        auto ce = column_echelon(a);
        ASSERT_EQ(a * ce.R, ce.H);
        ASSERT_TRUE(is_unimodular(ce.R));
        for (std::size_t j = ce.rank; j < c; ++j) {
            for (std::size_t i = 0; i < r; ++i) ASSERT_EQ(ce.H(i, j), 0);
        }
    }
}

TEST(Elimination, RankAndDeterminantMatchOracles) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        auto a = oracle::random_matrix(rng, r, c, -3, 3);
        ASSERT_EQ(rank(a), oracle::rank_over_q(a));
        auto piv = pivot_columns(a);
        ASSERT_EQ(piv.size(), rank(a));
        ASSERT_EQ(oracle::rank_over_q(a.select_columns(piv)), piv.size());
        std::size_t n = 1 + rng() % 5;
        auto sq = oracle::random_matrix(rng, n, n, -4, 4);
        ASSERT_EQ(determinant(sq), oracle::det_by_cofactors(sq));
    }
}

TEST(Elimination, FractionFreeSolve) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + rng() % 4;
        auto a = oracle::random_matrix(rng, n, n, -4, 4);
        if (oracle::det_by_cofactors(a) == 0) continue;
        auto b = oracle::random_matrix(rng, n, 2, -5, 5);
        auto sol = solve_fraction_free(a, b);
        ASSERT_GT(sol.denominator, 0);
        Integer det = oracle::det_by_cofactors(a);
        ASSERT_EQ(abs(det), sol.denominator);
        IntegerMatrix scaled = b;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < 2; ++j) scaled(i, j) *= sol.denominator;
        }
        ASSERT_EQ(a * sol.numerators, scaled);
    }
}

TEST(Elimination, IntegerSolve) {
    IntegerMatrix a{{2, 0}, {0, 3}};
    auto x = solve_integer(a, ints({4, 9}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, ints({2, 3}));
    EXPECT_FALSE(solve_integer(a, ints({1, 0})).has_value());
    IntegerMatrix d{{-1, 1, 0}, {1, 0, -1}, {0, -1, 1}};
    auto y = solve_integer(d, ints({1, -1, 0}));
    ASSERT_TRUE(y.has_value());
    IntegerMatrix col(3, 1);
    for (std::size_t i = 0; i < 3; ++i) col(i, 0) = (*y)[i];
    EXPECT_EQ(d * col, (IntegerMatrix{{1}, {-1}, {0}}));
}

TEST(IntegerKernel, SingleRow) {
    auto k = integer_kernel_basis(IntegerMatrix{{1, -1}});
    ASSERT_EQ(k.rank(), 1u);
    EXPECT_EQ(k.denominator(), 1);
    auto g = k.generators();
    EXPECT_EQ(abs(g(0, 0)), 1);
    EXPECT_EQ(g(0, 0), g(1, 0));
}

TEST(IntegerKernel, CyclicTriangle) {
    // tails 0,1,2 heads 1,2,0
    IntegerMatrix d{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}};
    auto k = integer_kernel_basis(d);
    ASSERT_EQ(k.rank(), 1u);
    EXPECT_EQ(k.generators(), (IntegerMatrix{{1}, {1}, {1}}));
}

TEST(IntegerKernel, InvertibleHasEmptyBasis) {
    EXPECT_EQ(integer_kernel_basis(IntegerMatrix{{2, 1}, {1, 1}}).rank(), 0u);
}

TEST(IntegerKernel, SaturatedAgainstBoxSearch) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 2, c = 2 + rng() % 2;
        auto a = oracle::random_matrix(rng, r, c, -3, 3);
        auto k = integer_kernel_basis(a);
        ASSERT_EQ(k.rank(), c - oracle::rank_over_q(a));
        ASSERT_EQ(a * k.generators(), IntegerMatrix(r, k.generator_count()));
        for (const auto& x : oracle::kernel_vectors_in_box(a, 3)) {
            std::vector<Rational> xq(x.begin(), x.end());
            ASSERT_TRUE(k.contains(xq));
        }
    }
}

TEST(RowSpaceProjection, SingleEdge) {
    auto p = row_space_projection(IntegerMatrix{{1, -1}});
    RationalMatrix want(2, 2);
    want(0, 0) = want(1, 1) = make_rational(1, 2);
    want(0, 1) = want(1, 0) = make_rational(-1, 2);
    EXPECT_EQ(p, want);
}

TEST(RowSpaceProjection, Identity) {
    EXPECT_EQ(row_space_projection(IntegerMatrix::identity(3)), to_rational(IntegerMatrix::identity(3)));
}

TEST(RowSpaceProjection, CyclicTriangle) {
    IntegerMatrix d{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}};
    auto p = row_space_projection(d);
    RationalMatrix want(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) want(i, j) = (i == j ? Rational(1) : Rational(0)) - make_rational(1, 3);
    }
    EXPECT_EQ(p, want);
}

TEST(RowSpaceProjection, IdempotentSymmetricOnRandomMatrices) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        auto a = oracle::random_matrix(rng, r, c, -2, 2);
        auto p = row_space_projection(a);
        ASSERT_EQ(p * p, p);
        ASSERT_EQ(p.transpose(), p);
        auto at = to_rational(a).transpose();
        ASSERT_EQ(p * at, at);
        auto k = integer_kernel_basis(a);
        ASSERT_TRUE((p * to_rational(k.generators())).is_zero());
    }
}

TEST(LatticeQuotient, Scaling) {
    Lattice sub(IntegerMatrix{{2, 0}, {0, 2}});
    EXPECT_EQ(lattice_quotient_invariants(sub, Lattice::standard(2)).invariant_factors(), ints({2, 2}));
}

TEST(LatticeQuotient, IndexTwo) {
    Lattice sub(IntegerMatrix{{1, 1}, {1, -1}});
    EXPECT_EQ(lattice_quotient_invariants(sub, Lattice::standard(2)).invariant_factors(), ints({2}));
}

TEST(LatticeQuotient, EqualLatticesGiveTrivialGroup) {
    Lattice l(IntegerMatrix{{3, 1}, {0, 5}});
    EXPECT_TRUE(lattice_quotient_invariants(l, l).is_trivial());
}

TEST(LatticeQuotient, RationalSuperLattice) {
    Lattice super(IntegerMatrix{{1}, {1}}, 2);
    Lattice sub(IntegerMatrix{{1}, {1}});
    EXPECT_EQ(lattice_quotient_invariants(sub, super).invariant_factors(), ints({2}));
}

TEST(LatticeQuotient, RejectsNonContainedAndRankMismatch) {
    Lattice z2 = Lattice::standard(2);
    Lattice half(IntegerMatrix{{1, 0}, {0, 1}}, 2);
    EXPECT_THROW(lattice_quotient_invariants(half, z2), PreconditionError);
    Lattice line(IntegerMatrix{{1}, {0}});
    EXPECT_THROW(lattice_quotient_invariants(line, z2), PreconditionError);
}

TEST(LatticeQuotient, OrderIsDeterminantOfChangeOfBasis) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + rng() % 3;
        auto c = oracle::random_matrix(rng, n, n, -4, 4);
        Integer det = oracle::det_by_cofactors(c);
        if (det == 0) continue;
        auto basis = oracle::random_matrix(rng, n, n, -3, 3);
        if (oracle::det_by_cofactors(basis) == 0) continue;
        Lattice super(basis);
        Lattice sub(basis * c);
        auto g = lattice_quotient_invariants(sub, super);
        ASSERT_EQ(g.order(), abs(det));
    }
}

TEST(Lattice, CanonicalFormAndMembership) {
    auto l = Lattice::from_rational_generators([] {
        RationalMatrix m(2, 2);
        m(0, 0) = make_rational(1, 2);
        m(1, 0) = make_rational(1, 2);
        m(0, 1) = 1;
        m(1, 1) = 0;
        return m;
    }());
    EXPECT_EQ(l.denominator(), 2);
    EXPECT_TRUE(l.contains({make_rational(1, 2), make_rational(1, 2)}));
    EXPECT_TRUE(l.contains({Rational(0), Rational(1)}));
    EXPECT_FALSE(l.contains({make_rational(1, 2), Rational(0)}));
    Lattice same(IntegerMatrix{{1, 2}, {1, 0}}, 2);
    EXPECT_TRUE(l.same_lattice(same));
    EXPECT_FALSE(l.same_lattice(Lattice::standard(2)));
}

TEST(AbelianGroupTest, FromCyclicOrdersAndElementOrders) {
    auto cyc = ints({2, 3, 4});
    auto g = AbelianGroup::from_cyclic_orders(cyc);
    EXPECT_EQ(g.invariant_factors(), ints({2, 12}));
    EXPECT_EQ(g.order(), 24);
    EXPECT_EQ(g.exponent(), 12);
    EXPECT_EQ(g.to_string(), "Z/2 + Z/12");
    // Z/2 + Z/4: element orders 1, 2 (x3), 4 (x4)
    std::vector<std::uint64_t> orders{1, 2, 2, 2, 4, 4, 4, 4};
    EXPECT_EQ(AbelianGroup::from_element_orders(orders).invariant_factors(), ints({2, 4}));
    EXPECT_TRUE(AbelianGroup().is_trivial());
    EXPECT_EQ(AbelianGroup().exponent(), 1);
    EXPECT_EQ(AbelianGroup().to_string(), "0");
    EXPECT_THROW(AbelianGroup::from_invariant_factors(ints({4, 2})), PreconditionError);
}

} // namespace
} // namespace critgrp
