#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cat2alg/exactlin.hpp>
#include <cat2alg/rng.hpp>

#include "support/oracles.hpp"

using namespace cat2alg;

namespace {

bool is_divisor_chain(const IntMatrix& d) {
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) < 0) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Int& a = d.at(i, i);
        const Int& b = d.at(i + 1, i + 1);
        if (a == 0) {
            if (b != 0) return false;
        } else if (b % a != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> nonzero_diagonal(const IntMatrix& d) {
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) out.push_back(d.at(i, i));
    return out;
}

} // namespace

TEST_CASE("smith normal form on a fixed example") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithNormalForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(oracle::det_cofactor(s.U) * oracle::det_cofactor(s.U) == 1);
    CHECK(oracle::det_cofactor(s.V) * oracle::det_cofactor(s.V) == 1);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(s.D.at(0, 1) == 0);
    CHECK(s.D.at(1, 0) == 0);
}

TEST_CASE("smith normal form on random matrices vs the minors oracle") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(5);
        std::size_t cols = 1 + rng.below(5);
        IntMatrix m = oracle::random_int_matrix(rng, rows, cols, 10);

        SmithNormalForm s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(oracle::det_cofactor(s.U) * oracle::det_cofactor(s.U) == 1);
        CHECK(oracle::det_cofactor(s.V) * oracle::det_cofactor(s.V) == 1);
        CHECK(is_divisor_chain(s.D));
        CHECK(nonzero_diagonal(s.D) == oracle::invariant_factors_by_minors(m));
    }
}

TEST_CASE("smith normal form of empty and zero matrices") {
    SmithNormalForm s0 = smith_normal_form(IntMatrix(0, 3));
    CHECK(s0.D.rows() == 0);
    CHECK(s0.D.cols() == 3);
    CHECK(s0.V == IntMatrix::identity(3));

    SmithNormalForm sz = smith_normal_form(IntMatrix(2, 2));
    CHECK(sz.D == IntMatrix(2, 2));
}

TEST_CASE("cokernel basics") {
    CHECK(cokernel(IntMatrix(0, 3)) == FinAbGroup({0, 0, 0}));
    CHECK(cokernel(IntMatrix::from_rows({{2, 4}, {6, 8}})) == FinAbGroup({2, 4}));
    CHECK(cokernel(IntMatrix::identity(4)).is_trivial());
    CHECK(cokernel(IntMatrix::from_rows({{2, 0}})) == FinAbGroup({2, 0}));
    CHECK(cokernel(IntMatrix::from_rows({{1, 0}, {0, 1}, {5, 7}})).is_trivial());
}

TEST_CASE("cokernel is invariant under unimodular changes of presentation") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        IntMatrix m = oracle::random_int_matrix(rng, rows, cols, 8);
        IntMatrix a = oracle::random_unimodular(rng, rows);
        IntMatrix b = oracle::random_unimodular(rng, cols);
        CHECK(cokernel(a * m * b) == cokernel(m));
    }
}

TEST_CASE("determinant matches the cofactor oracle") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix m = oracle::random_int_matrix(rng, n, n, 9);
        CHECK(det_bareiss(m) == oracle::det_cofactor(m));
    }
    CHECK(det_bareiss(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS((void)det_bareiss(IntMatrix(2, 3)), Error);
}

TEST_CASE("unimodularity of elementary products") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng.below(4);
        CHECK(is_unimodular(oracle::random_unimodular(rng, n)));
        IntMatrix d = IntMatrix::identity(n);
        d.at(0, 0) = 2;
        CHECK_FALSE(is_unimodular(d));
    }
}

TEST_CASE("integer inverse of unimodular matrices") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix u = oracle::random_unimodular(rng, n);
        IntMatrix inv = int_inverse(u);
        CHECK(u * inv == IntMatrix::identity(n));
        CHECK(inv * u == IntMatrix::identity(n));
    }
    CHECK_THROWS_AS((void)int_inverse(IntMatrix::from_rows({{2}})), Error);
    CHECK_THROWS_AS((void)int_inverse(IntMatrix(2, 2)), Error);
}

TEST_CASE("rational kernel and solve") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        RatMatrix m = to_rat(oracle::random_int_matrix(rng, rows, cols, 6));

        RatMatrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
        CHECK(rank(m) + k.cols() == cols);

        RatVec x(cols);
        for (std::size_t i = 0; i < cols; ++i) x[i] = Rat(rng.range(-5, 5));
        RatVec b = m * x;
        RatSolution sol = solve_linear(m, b);
        CHECK(sol.solvable);
        CHECK(m * sol.particular == b);

        RatVec c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = Rat(rng.range(-5, 5));
        RatSolution sol2 = solve_linear(m, c);
        RatMatrix aug = m;
        aug = hstack(aug, RatMatrix(rows, 1));
        for (std::size_t i = 0; i < rows; ++i) aug.at(i, cols) = c[i];
        CHECK(sol2.solvable == (rank(aug) == rank(m)));
        if (sol2.solvable) CHECK(m * sol2.particular == c);
    }
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(5);
        IntMatrix m = oracle::random_int_matrix(rng, rows, cols, 7);

        IntMatrix k = int_kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(rank(to_rat(k)) == k.cols());
        CHECK(rank(to_rat(m)) + k.cols() == cols);
        if (k.cols() > 0) {
            // Saturated: the inclusion of the lattice has trivial torsion.
            FinAbGroup q = cokernel(k.transposed());
            CHECK(q.torsion_count() == 0);
        }
    }
}

TEST_CASE("integer solve") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.below(4);
        std::size_t cols = 1 + rng.below(4);
        IntMatrix m = oracle::random_int_matrix(rng, rows, cols, 6);
        IntVec x(cols);
        for (std::size_t i = 0; i < cols; ++i) x[i] = Int(rng.range(-5, 5));
        IntVec b = m * x;
        IntSolution sol = int_solve_linear(m, b);
        REQUIRE(sol.solvable);
        CHECK(m * sol.particular == b);
    }

    IntMatrix two = IntMatrix::from_rows({{2}});
    IntSolution no = int_solve_linear(two, {Int(1)});
    CHECK_FALSE(no.solvable);
    RatSolution yes = solve_linear(to_rat(two), {Rat(1)});
    CHECK(yes.solvable);
}

TEST_CASE("invariant factor group validation") {
    CHECK_THROWS_AS(FinAbGroup({2, 3}), Error);     // 2 does not divide 3
    CHECK_THROWS_AS(FinAbGroup({1, 2}), Error);     // explicit 1 not allowed
    CHECK_THROWS_AS(FinAbGroup({0, 2}), Error);     // free part must trail
    CHECK_THROWS_AS(FinAbGroup({Int(-2)}), Error);  // negative factor

    FinAbGroup g({2, 4, 0});
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion_count() == 2);
    CHECK_FALSE(g.is_finite());
    CHECK_THROWS_AS((void)g.order(), Error);

    FinAbGroup h = FinAbGroup::from_diagonal({Int(1), Int(2), Int(6)}, 0);
    CHECK(h == FinAbGroup({2, 6}));
    CHECK(h.order() == 12);
    CHECK(to_string(h) == "Z/2 + Z/6");
}

TEST_CASE("complement basis spans the quotient") {
    SplitMix64 rng(1212);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.below(5);
        std::size_t k = rng.below(n + 1);
        RatMatrix s = to_rat(oracle::random_int_matrix(rng, n, k, 5));
        RatMatrix c = complement_basis(s, n);
        CHECK(rank(s) + c.cols() == n);
        if (c.cols() > 0 || s.cols() > 0) {
            RatMatrix joint = (s.cols() == 0) ? c : (c.cols() == 0 ? s : hstack(s, c));
            CHECK(rank(joint) == n);
        }
    }
}

TEST_CASE("matrix building blocks") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a.transposed() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
    CHECK((a - a).is_zero());
    CHECK(hstack(a, a).cols() == 4);
    CHECK(vstack(a, a).rows() == 4);
    CHECK_THROWS_AS((void)(a * IntMatrix(3, 2)), Error);
    CHECK(to_string(FinAbGroup()) == "0");
}
