#include "cat2alg/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cat2alg {

namespace {

void check_same_shape(const char* op, std::size_t ar, std::size_t ac,
                      std::size_t br, std::size_t bc) {
    if (ar != br || ac != bc)
        fail(ErrorKind::dimension_mismatch,
             std::string(op) + ": " + std::to_string(ar) + "x" + std::to_string(ac) +
                 " vs " + std::to_string(br) + "x" + std::to_string(bc));
}

void check_mul_shape(const char* op, std::size_t ac, std::size_t br) {
    if (ac != br)
        fail(ErrorKind::dimension_mismatch,
             std::string(op) + ": inner dimensions " + std::to_string(ac) + " vs " +
                 std::to_string(br));
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            fail(ErrorKind::invalid_input, "ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Int(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            fail(ErrorKind::invalid_input, "ragged row list");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    check_mul_shape("IntMatrix*", a.cols(), b.rows());
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape("IntMatrix+", a.rows(), a.cols(), b.rows(), b.cols());
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape("IntMatrix-", a.rows(), a.cols(), b.rows(), b.cols());
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = -a.at(i, j);
    return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
    check_mul_shape("IntMatrix*vec", a.cols(), x.size());
    IntVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    check_mul_shape("RatMatrix*", a.cols(), b.rows());
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape("RatMatrix+", a.rows(), a.cols(), b.rows(), b.cols());
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape("RatMatrix-", a.rows(), a.cols(), b.rows(), b.cols());
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = -a.at(i, j);
    return c;
}

RatMatrix operator*(const Rat& c, const RatMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = c * a.at(i, j);
    return r;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
    check_mul_shape("RatMatrix*vec", a.cols(), x.size());
    RatVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    check_mul_shape("RatVec+", a.size(), b.size());
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    check_mul_shape("RatVec-", a.size(), b.size());
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RatVec operator-(const RatVec& a) {
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

RatVec operator*(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::dimension_mismatch, "hstack: row counts differ");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) fail(ErrorKind::dimension_mismatch, "vstack: column counts differ");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
    }
    return c;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::dimension_mismatch, "hstack: row counts differ");
    RatMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) fail(ErrorKind::dimension_mismatch, "vstack: column counts differ");
    RatMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c.at(a.rows() + i, j) = b.at(i, j);
    }
    return c;
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

namespace {

template <typename M>
std::string matrix_to_string(const M& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << "]\n";
    }
    return out.str();
}

template <typename V>
std::string vector_to_string(const V& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    out << ']';
    return out.str();
}

} // namespace

std::string to_string(const IntMatrix& m) { return matrix_to_string(m); }
std::string to_string(const RatMatrix& m) { return matrix_to_string(m); }
std::string to_string(const RatVec& v) { return vector_to_string(v); }
std::string to_string(const IntVec& v) { return vector_to_string(v); }

FinAbGroup::FinAbGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 0 || factors_[i] == 1)
            fail(ErrorKind::invalid_input,
                 "invariant factor " + factors_[i].get_str() + " at position " +
                     std::to_string(i));
        if (i + 1 < factors_.size()) {
            const Int& a = factors_[i];
            const Int& b = factors_[i + 1];
            bool ok = (a == 0) ? (b == 0) : (b % a == 0);
            if (!ok)
                fail(ErrorKind::invalid_input,
                     "invariant factors violate the divisor chain: " + a.get_str() +
                         " then " + b.get_str());
        }
    }
}

FinAbGroup FinAbGroup::from_diagonal(const std::vector<Int>& diag, std::size_t free_rank) {
    std::vector<Int> f;
    for (const Int& d : diag) {
        Int a = abs(d);
        if (a == 0 || a == 1) continue;
        f.push_back(a);
    }
    std::sort(f.begin(), f.end());
    f.insert(f.end(), free_rank, Int(0));
    return FinAbGroup(std::move(f));
}

std::size_t FinAbGroup::free_rank() const {
    std::size_t n = 0;
    for (const Int& d : factors_)
        if (d == 0) ++n;
    return n;
}

Int FinAbGroup::order() const {
    if (!is_finite()) fail(ErrorKind::unsupported, "order of an infinite group");
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

std::string to_string(const FinAbGroup& g) {
    if (g.is_trivial()) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.factors().size(); ++i) {
        if (i) s += " + ";
        s += (g.factors()[i] == 0) ? "Z" : "Z/" + g.factors()[i].get_str();
    }
    return s;
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithNormalForm r{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& U = r.U;
    IntMatrix& D = r.D;
    IntMatrix& V = r.V;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(D.at(a, j), D.at(b, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(D.at(i, a), D.at(i, b));
        for (std::size_t i = 0; i < cols; ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < cols; ++j) D.at(dst, j) += c * D.at(src, j);
        for (std::size_t j = 0; j < rows; ++j) U.at(dst, j) += c * U.at(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < rows; ++i) D.at(i, dst) += c * D.at(i, src);
        for (std::size_t i = 0; i < cols; ++i) V.at(i, dst) += c * V.at(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < rows; ++j) U.at(i, j) = -U.at(i, j);
    };

    const std::size_t nmin = std::min(rows, cols);
    std::size_t t = 0;
    while (t < nmin) {
        // Move the smallest nonzero absolute value of the remaining
        // submatrix to position (t, t).
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (D.at(i, j) == 0) continue;
                Int a = abs(D.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // Reduce column t and row t by the pivot. Leftover remainders are
        // strictly smaller than the pivot, so re-selecting the minimum
        // terminates.
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (D.at(i, t) == 0) continue;
            Int q = D.at(i, t) / D.at(t, t);
            if (q != 0) add_row(i, t, -q);
            if (D.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (D.at(t, j) == 0) continue;
            Int q = D.at(t, j) / D.at(t, t);
            if (q != 0) add_col(j, t, -q);
            if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // The pivot must divide the rest of the submatrix; if not, pull the
        // offending row up and restart this pivot.
        bool pulled = false;
        for (std::size_t i = t + 1; i < rows && !pulled; ++i)
            for (std::size_t j = t + 1; j < cols && !pulled; ++j)
                if (D.at(i, j) % D.at(t, t) != 0) {
                    add_row(t, i, Int(1));
                    pulled = true;
                }
        if (pulled) continue;

        if (D.at(t, t) < 0) negate_row(t);
        ++t;
    }
    return r;
}

std::size_t int_rank(const IntMatrix& m) { return rank(to_rat(m)); }

FinAbGroup cokernel(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<Int> diag;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < nmin; ++i) {
        if (snf.D.at(i, i) != 0) {
            diag.push_back(snf.D.at(i, i));
            ++rk;
        }
    }
    return FinAbGroup::from_diagonal(diag, m.cols() - rk);
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev; // exact by the Bareiss identity
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Int d = det_bareiss(m);
    return d == 1 || d == -1;
}

IntMatrix int_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols())
        fail(ErrorKind::dimension_mismatch, "int_inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug = hstack(to_rat(m), RatMatrix::identity(n));
    std::vector<std::size_t> pivots = rref(aug);
    // Every pivot must land in the left block, or that block is singular.
    if (pivots.size() != n || (n > 0 && pivots[n - 1] >= n))
        fail(ErrorKind::invalid_input, "int_inverse of a singular matrix");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& x = aug.at(i, n + j);
            if (x.get_den() != 1)
                fail(ErrorKind::invalid_input, "int_inverse: inverse is not integral");
            inv.at(i, j) = x.get_num();
        }
    return inv;
}

IntMatrix int_kernel_basis(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    const std::size_t nmin = std::min(m.rows(), m.cols());
    std::size_t rk = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (snf.D.at(i, i) != 0) ++rk;
    IntMatrix k(m.cols(), m.cols() - rk);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = rk; j < m.cols(); ++j) k.at(i, j - rk) = snf.V.at(i, j);
    return k;
}

IntSolution int_solve_linear(const IntMatrix& m, const IntVec& b) {
    check_mul_shape("int_solve_linear", m.rows(), b.size());
    SmithNormalForm snf = smith_normal_form(m);
    IntVec c = snf.U * b;
    const std::size_t nmin = std::min(m.rows(), m.cols());

    IntSolution sol;
    sol.kernel = int_kernel_basis(m);

    IntVec y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int d = (i < nmin) ? snf.D.at(i, i) : Int(0);
        if (d != 0) {
            if (c[i] % d != 0) return sol; // unsolvable over Z
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return sol;
        }
    }
    sol.solvable = true;
    sol.particular = snf.V * y;
    return sol;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix tmp = m;
    return rref(tmp).size();
}

namespace {

// Kernel vectors read off a reduced row echelon form. Only the first ncols
// columns of r participate (r may be an augmented matrix).
RatMatrix kernel_from_rref(const RatMatrix& r, const std::vector<std::size_t>& pivots,
                           std::size_t ncols) {
    std::vector<std::size_t> piv;
    for (std::size_t c : pivots)
        if (c < ncols) piv.push_back(c);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : piv) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMatrix k(ncols, free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t f = free_cols[fi];
        k.at(f, fi) = 1;
        for (std::size_t row = 0; row < piv.size(); ++row) k.at(piv[row], fi) = -r.at(row, f);
    }
    return k;
}

} // namespace

RatMatrix kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    return kernel_from_rref(r, pivots, m.cols());
}

RatSolution solve_linear(const RatMatrix& m, const RatVec& b) {
    check_mul_shape("solve_linear", m.rows(), b.size());
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);

    RatSolution sol;
    sol.kernel = kernel_from_rref(aug, pivots, m.cols());
    if (!pivots.empty() && pivots.back() == m.cols()) return sol; // inconsistent

    sol.solvable = true;
    sol.particular.assign(m.cols(), Rat(0));
    for (std::size_t row = 0; row < pivots.size(); ++row)
        sol.particular[pivots[row]] = aug.at(row, m.cols());
    return sol;
}

RatMatrix column_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    RatMatrix b(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, pivots[j]);
    return b;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::invalid_input, "rat_inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug = hstack(m, RatMatrix::identity(n));
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        fail(ErrorKind::invalid_input, "rat_inverse: matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

RatMatrix complement_basis(const RatMatrix& s, std::size_t n) {
    if (s.rows() != n && !(s.rows() == 0 && s.cols() == 0))
        fail(ErrorKind::dimension_mismatch, "complement_basis: span matrix has wrong height");
    RatMatrix rt = s.transposed();
    std::vector<std::size_t> pivots = rref(rt);
    std::vector<bool> covered(n, false);
    for (std::size_t c : pivots) covered[c] = true;
    std::size_t extra = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!covered[i]) ++extra;
    RatMatrix comp(n, extra);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (!covered[i]) comp.at(i, j++) = 1;
    return comp;
}

} // namespace cat2alg
