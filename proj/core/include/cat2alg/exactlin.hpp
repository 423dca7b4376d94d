// Exact linear algebra over Z and Q on top of GMP. Everything here is
// arbitrary precision; no floating point anywhere in the library.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cat2alg/error.hpp"

namespace cat2alg {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrix over Z, row-major. Matrices act on column vectors.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;

    bool is_zero() const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Dense matrix over Q, row-major. Matrices act on column vectors.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transposed() const;

    bool is_zero() const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntVec operator*(const IntMatrix& a, const IntVec& x);

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);
RatMatrix operator*(const Rat& c, const RatMatrix& a);
RatVec operator*(const RatMatrix& a, const RatVec& x);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& c, const RatVec& a);
bool is_zero(const RatVec& v);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

RatMatrix to_rat(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const RatMatrix& m);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

// Finitely generated abelian group in invariant-factor form. factors() is
// the divisor chain d1 | d2 | ... with no entry equal to 1; an entry 0
// denotes a free summand Z, and zero entries come last (0 is divisible only
// by everything, so the chain rule already forces that).
class FinAbGroup {
public:
    FinAbGroup() = default; // trivial group

    // Validates the divisor chain; throws Error(invalid_input) otherwise.
    explicit FinAbGroup(std::vector<Int> factors);

    // Canonicalizes an arbitrary list of elementary divisors plus a free
    // rank: drops 1s, sorts into a chain (the input must already be a chain
    // up to units, as produced by a Smith normal form).
    static FinAbGroup from_diagonal(const std::vector<Int>& diag, std::size_t free_rank);

    const std::vector<Int>& factors() const { return factors_; }
    std::size_t free_rank() const;
    std::size_t torsion_count() const { return factors_.size() - free_rank(); }
    bool is_finite() const { return free_rank() == 0; }
    bool is_trivial() const { return factors_.empty(); }

    // Number of elements; requires a finite group.
    Int order() const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) = default;

private:
    std::vector<Int> factors_;
};

std::string to_string(const FinAbGroup& g);

// Smith normal form U * M * V == D with U, V unimodular and D diagonal with
// a divisor chain d1 | d2 | ... along the diagonal.
struct SmithNormalForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Nonzero diagonal count of the Smith form.
std::size_t int_rank(const IntMatrix& m);

// Z^cols(m) modulo the row span of m.
FinAbGroup cokernel(const IntMatrix& m);

// Determinant by fraction-free (Bareiss) elimination; square input only.
Int det_bareiss(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Inverse of a unimodular matrix (integer matrix with integer inverse).
IntMatrix int_inverse(const IntMatrix& m);

// Lattice basis of {x in Z^cols : m x = 0}; columns of the result. The
// columns of V beyond the rank of the Smith form give a saturated basis.
IntMatrix int_kernel_basis(const IntMatrix& m);

struct IntSolution {
    bool solvable = false;
    IntVec particular;  // one solution of m x = b when solvable
    IntMatrix kernel;   // columns span {x : m x = 0} over Z
};

IntSolution int_solve_linear(const IntMatrix& m, const IntVec& b);

// Reduced row echelon form computed in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Basis of {x in Q^cols : m x = 0}; columns of the result.
RatMatrix kernel_basis(const RatMatrix& m);

struct RatSolution {
    bool solvable = false;
    RatVec particular;  // one solution of m x = b when solvable
    RatMatrix kernel;   // columns span {x : m x = 0}
};

RatSolution solve_linear(const RatMatrix& m, const RatVec& b);

// Standard basis vectors extending the span of the columns of s to Q^n;
// columns of the result.
RatMatrix complement_basis(const RatMatrix& s, std::size_t n);

// The columns of m sitting at the RREF pivot positions: a basis of the
// column space of m.
RatMatrix column_basis(const RatMatrix& m);

// Inverse of an invertible square matrix; throws Error(invalid_input) when
// m is not square or is singular.
RatMatrix rat_inverse(const RatMatrix& m);

} // namespace cat2alg
