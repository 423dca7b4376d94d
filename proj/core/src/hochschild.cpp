#include "cat2alg/hochschild.hpp"

#include <cassert>
#include <string>

namespace cat2alg {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

RatVec basis_vec(std::size_t n, std::size_t i) {
    RatVec v(n);
    v[i] = 1;
    return v;
}

RatVec col_of(const RatMatrix& m, std::size_t j) {
    RatVec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

RatMatrix single_col(const RatVec& v) {
    RatMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

// Row-major vectorization of a linear map A -> A: entry (r,c) lands at
// index r*n+c. Shared by the derivation solver and the bar complex so both
// speak the same coordinates.
RatVec vec_of(const RatMatrix& m) {
    RatVec v(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
    return v;
}

RatMatrix mat_of(const RatVec& v, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
    return m;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

// Coordinates of the quotient of Q^ambient by the column span of sub: comp
// holds standard-vector representatives of the quotient basis and proj
// sends an ambient vector to its quotient coordinates.
struct QuotientCoords {
    RatMatrix comp; // ambient x q
    RatMatrix proj; // q x ambient
};

QuotientCoords quotient_by(const RatMatrix& sub_span, std::size_t ambient) {
    RatMatrix sub = column_basis(sub_span);
    RatMatrix comp = complement_basis(sub, ambient);
    if (sub.cols() == 0) return {comp, RatMatrix::identity(ambient)};
    RatMatrix inv = rat_inverse(hstack(sub, comp));
    RatMatrix proj(comp.cols(), ambient);
    for (std::size_t r = 0; r < comp.cols(); ++r)
        for (std::size_t c = 0; c < ambient; ++c) proj.at(r, c) = inv.at(sub.cols() + r, c);
    return {comp, proj};
}

// Coordinates of each column of v in the independent column family b. The
// callers only use this where membership is guaranteed by construction.
RatMatrix coords_in(const RatMatrix& b, const RatMatrix& v) {
    RatMatrix out(b.cols(), v.cols());
    for (std::size_t c = 0; c < v.cols(); ++c) {
        RatSolution sol = solve_linear(b, col_of(v, c));
        assert(sol.solvable);
        for (std::size_t r = 0; r < b.cols(); ++r) out.at(r, c) = sol.particular[r];
    }
    return out;
}

} // namespace

RatVec FinDimAlgebra::mul(const RatVec& x, const RatVec& y) const {
    RatVec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            const Rat c = x[i] * y[j];
            const RatVec& p = mult_at(i, j);
            for (std::size_t k = 0; k < dim; ++k) out[k] += c * p[k];
        }
    }
    return out;
}

RatMatrix FinDimAlgebra::left_mult(const RatVec& x) const {
    RatMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec c = mul(x, basis_vec(dim, j));
        for (std::size_t r = 0; r < dim; ++r) m.at(r, j) = c[r];
    }
    return m;
}

RatMatrix FinDimAlgebra::right_mult(const RatVec& x) const {
    RatMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec c = mul(basis_vec(dim, j), x);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, j) = c[r];
    }
    return m;
}

void validate_algebra(const FinDimAlgebra& a) {
    const std::size_t n = a.dim;
    if (n == 0) fail(ErrorKind::invalid_input, "algebra: dimension must be positive");
    if (a.mult.size() != n * n)
        fail(ErrorKind::invalid_input, "algebra: structure constant table has the wrong size");
    for (const RatVec& v : a.mult)
        if (v.size() != n)
            fail(ErrorKind::invalid_input, "algebra: structure constant entry has the wrong size");
    if (a.unit.size() != n) fail(ErrorKind::invalid_input, "algebra: unit vector has the wrong size");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.mul(a.mult_at(i, j), basis_vec(n, k)) !=
                    a.mul(basis_vec(n, i), a.mult_at(j, k)))
                    fail(ErrorKind::invalid_input,
                         "algebra: associativity fails at " + triple_str(i, j, k));
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec e = basis_vec(n, i);
        if (a.mul(a.unit, e) != e || a.mul(e, a.unit) != e)
            fail(ErrorKind::invalid_input,
                 "algebra: unit law fails at (" + std::to_string(i) + ")");
    }
}

bool is_commutative(const FinDimAlgebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            if (a.mult_at(i, j) != a.mult_at(j, i)) return false;
    return true;
}

FinDimAlgebra dual_numbers() {
    FinDimAlgebra d;
    d.dim = 2;
    d.mult.assign(4, RatVec(2));
    d.mult[0 * 2 + 0][0] = 1; // 1 * 1
    d.mult[0 * 2 + 1][1] = 1; // 1 * e
    d.mult[1 * 2 + 0][1] = 1; // e * 1
    d.unit = basis_vec(2, 0);
    return d;
}

FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    validate_algebra(a);
    validate_algebra(b);
    const std::size_t na = a.dim, nb = b.dim;
    FinDimAlgebra t;
    t.dim = na * nb;
    t.mult.assign(t.dim * t.dim, RatVec(t.dim));
    for (std::size_t i1 = 0; i1 < na; ++i1)
        for (std::size_t j1 = 0; j1 < nb; ++j1)
            for (std::size_t i2 = 0; i2 < na; ++i2)
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    RatVec& out = t.mult[(i1 * nb + j1) * t.dim + (i2 * nb + j2)];
                    const RatVec& pa = a.mult_at(i1, i2);
                    const RatVec& pb = b.mult_at(j1, j2);
                    for (std::size_t k = 0; k < na; ++k) {
                        if (pa[k] == 0) continue;
                        for (std::size_t l = 0; l < nb; ++l) out[k * nb + l] = pa[k] * pb[l];
                    }
                }
    t.unit.assign(t.dim, Rat(0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) t.unit[i * nb + j] = a.unit[i] * b.unit[j];
    return t;
}

FinDimAlgebra base_change(const FinDimAlgebra& a, const FinDimAlgebra& b) {
    validate_algebra(b);
    if (!is_commutative(b))
        fail(ErrorKind::unsupported, "base change: the base ring must be commutative");
    return tensor_algebra(a, b);
}

RatMatrix FDModule::act(const RatVec& x) const {
    if (x.size() != action.size())
        fail(ErrorKind::dimension_mismatch, "module action: coefficient vector has the wrong size");
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) m = m + x[i] * action[i];
    return m;
}

void validate_module(const FinDimAlgebra& a, const FDModule& x) {
    if (x.action.size() != a.dim)
        fail(ErrorKind::invalid_input, "module: one action matrix per algebra basis element expected");
    for (const RatMatrix& m : x.action)
        if (m.rows() != x.dim || m.cols() != x.dim)
            fail(ErrorKind::invalid_input, "module: action matrix has the wrong shape");
    if (x.act(a.unit) != RatMatrix::identity(x.dim))
        fail(ErrorKind::invalid_input, "module: the unit does not act as the identity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (x.action[i] * x.action[j] != x.act(a.mult_at(i, j)))
                fail(ErrorKind::invalid_input,
                     "module: representation law fails at " + pair_str(i, j));
}

FDModule regular_module(const FinDimAlgebra& a) {
    FDModule x;
    x.dim = a.dim;
    for (std::size_t i = 0; i < a.dim; ++i) x.action.push_back(a.left_mult(basis_vec(a.dim, i)));
    return x;
}

FDModule dual_pushforward(const FinDimAlgebra& a, const FDModule& x) {
    const std::size_t n = a.dim;
    if (x.action.size() != 2 * n)
        fail(ErrorKind::dimension_mismatch,
             "dual pushforward: the module must live over the dual-number extension");
    RatMatrix d(x.dim, x.dim);
    for (std::size_t i = 0; i < n; ++i)
        if (a.unit[i] != 0) d = d + a.unit[i] * x.action[i * 2 + 1];
    QuotientCoords q = quotient_by(d, x.dim);
    FDModule out;
    out.dim = q.comp.cols();
    for (std::size_t i = 0; i < n; ++i)
        out.action.push_back(q.proj * x.action[i * 2 + 0] * q.comp);
    return out;
}

FDModule sample_dual_module(const FinDimAlgebra& a, SplitMix64& rng, std::size_t max_rank) {
    validate_algebra(a);
    if (!is_commutative(a))
        fail(ErrorKind::invalid_input, "module sampling: coefficient algebra must be commutative");
    if (max_rank == 0) fail(ErrorKind::invalid_input, "module sampling: max_rank must be positive");
    const std::size_t n = a.dim;
    const std::size_t k = 1 + rng.below(max_rank);
    std::size_t m = k * n;

    // Free module of rank k, coordinates grouped in blocks of n.
    std::vector<RatMatrix> act0;
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix l = a.left_mult(basis_vec(n, i));
        RatMatrix big(m, m);
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) big.at(b * n + r, b * n + c) = l.at(r, c);
        act0.push_back(big);
    }

    // One off-diagonal block of multiplication operators squares to zero;
    // conjugating by block-unipotent multiplication operators keeps the
    // map A-linear because A is commutative.
    RatMatrix d(m, m);
    if (k >= 2) {
        const std::size_t split = 1 + rng.below(k - 1);
        for (std::size_t br = 0; br < split; ++br)
            for (std::size_t bc = split; bc < k; ++bc) {
                RatVec u(n);
                for (Rat& e : u) e = Rat(rng.range(-2, 2));
                RatMatrix l = a.left_mult(u);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) d.at(br * n + r, bc * n + c) = l.at(r, c);
            }
        auto unipotent = [&](bool upper) {
            RatMatrix t = RatMatrix::identity(m);
            for (std::size_t br = 0; br < k; ++br)
                for (std::size_t bc = 0; bc < k; ++bc) {
                    if (upper ? br >= bc : br <= bc) continue;
                    if (rng.below(2) == 0) continue;
                    RatVec u(n);
                    for (Rat& e : u) e = Rat(rng.range(-1, 1));
                    RatMatrix l = a.left_mult(u);
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c)
                            t.at(br * n + r, bc * n + c) = l.at(r, c);
                }
            return t;
        };
        RatMatrix t = unipotent(true) * unipotent(false);
        d = t * d * rat_inverse(t);
    }

    // Half the time, pass to the coimage of a random endomorphism that
    // commutes with the action and with d; this yields non-free samples.
    if (rng.below(2) == 0) {
        RatMatrix sys((n + 1) * m * m, m * m);
        std::size_t row = 0;
        auto add_commutator = [&](const RatMatrix& w) {
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t c = 0; c < m; ++c) {
                    for (std::size_t q = 0; q < m; ++q) {
                        sys.at(row, p * m + q) += w.at(q, c);
                        sys.at(row, q * m + c) -= w.at(p, q);
                    }
                    ++row;
                }
        };
        for (std::size_t i = 0; i < n; ++i) add_commutator(act0[i]);
        add_commutator(d);
        RatMatrix kb = kernel_basis(sys);
        RatVec coeff(kb.cols());
        for (Rat& e : coeff) e = Rat(rng.range(-2, 2));
        RatMatrix phi = mat_of(kb * coeff, m, m);
        RatMatrix ker = kernel_basis(phi);
        if (ker.cols() > 0 && ker.cols() < m) {
            QuotientCoords q = quotient_by(ker, m);
            for (std::size_t i = 0; i < n; ++i) act0[i] = q.proj * act0[i] * q.comp;
            d = q.proj * d * q.comp;
            m = q.comp.cols();
        }
    }

    FDModule out;
    out.dim = m;
    out.action.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.action[i * 2 + 1] = act0[i] * d;
        out.action[i * 2 + 0] = std::move(act0[i]);
    }
    return out;
}

RatMatrix center(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    RatMatrix sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix ad = a.left_mult(basis_vec(n, i)) - a.right_mult(basis_vec(n, i));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sys.at(i * n + r, c) = ad.at(r, c);
    }
    return kernel_basis(sys);
}

std::vector<RatMatrix> derivations(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    // Leibniz rule on basis pairs, solved for the matrix entries D[r,c].
    RatMatrix sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) {
                const std::size_t row = (i * n + j) * n + s;
                for (std::size_t c = 0; c < n; ++c) sys.at(row, s * n + c) += a.mult_at(i, j)[c];
                for (std::size_t r = 0; r < n; ++r) {
                    sys.at(row, r * n + i) -= a.mult_at(r, j)[s];
                    sys.at(row, r * n + j) -= a.mult_at(i, r)[s];
                }
            }
    RatMatrix kb = kernel_basis(sys);
    std::vector<RatMatrix> out;
    for (std::size_t c = 0; c < kb.cols(); ++c) out.push_back(mat_of(col_of(kb, c), n, n));
    return out;
}

std::vector<RatMatrix> inner_derivations(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    RatMatrix cols(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix ad = a.left_mult(basis_vec(n, i)) - a.right_mult(basis_vec(n, i));
        RatVec v = vec_of(ad);
        for (std::size_t r = 0; r < n * n; ++r) cols.at(r, i) = v[r];
    }
    RatMatrix b = column_basis(cols);
    std::vector<RatMatrix> out;
    for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(mat_of(col_of(b, c), n, n));
    return out;
}

HH1 hh1(const FinDimAlgebra& a) {
    HH1 out;
    out.der_basis = derivations(a);
    out.inner_basis = inner_derivations(a);
    const std::size_t n = a.dim;
    RatMatrix span(n * n, out.inner_basis.size());
    for (std::size_t c = 0; c < out.inner_basis.size(); ++c) {
        RatVec v = vec_of(out.inner_basis[c]);
        for (std::size_t r = 0; r < n * n; ++r) span.at(r, c) = v[r];
    }
    std::size_t cur = span.cols();
    for (const RatMatrix& d : out.der_basis) {
        RatMatrix cand = hstack(span, single_col(vec_of(d)));
        if (rank(cand) > cur) {
            out.coset_basis.push_back(d);
            span = std::move(cand);
            ++cur;
        }
    }
    return out;
}

RatVec Ext1Context::class_coords(const RatMatrix& f) const {
    if (f.rows() != n || f.cols() != n)
        fail(ErrorKind::dimension_mismatch, "ext1 class: cochain has the wrong shape");
    RatVec v = vec_of(f);
    if (!is_zero(d1 * v)) fail(ErrorKind::invalid_input, "ext1 class: cochain is not a cocycle");
    RatSolution sol = solve_linear(hstack(boundaries, reps), v);
    if (!sol.solvable)
        fail(ErrorKind::invalid_input, "ext1 class: cocycle is outside the cocycle space");
    RatVec out(reps.cols());
    for (std::size_t j = 0; j < reps.cols(); ++j) out[j] = sol.particular[boundaries.cols() + j];
    return out;
}

Ext1Context ext1_bimodule(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    Ext1Context ctx;
    ctx.n = n;

    ctx.d0 = RatMatrix(n * n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RatMatrix f = a.right_mult(basis_vec(n, c)) - a.left_mult(basis_vec(n, c));
        RatVec v = vec_of(f);
        for (std::size_t r = 0; r < n * n; ++r) ctx.d0.at(r, c) = v[r];
    }

    ctx.d1 = RatMatrix(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) {
                const std::size_t row = (i * n + j) * n + s;
                for (std::size_t r = 0; r < n; ++r) {
                    ctx.d1.at(row, r * n + j) += a.mult_at(i, r)[s];
                    ctx.d1.at(row, r * n + i) += a.mult_at(r, j)[s];
                }
                for (std::size_t c = 0; c < n; ++c) ctx.d1.at(row, s * n + c) -= a.mult_at(i, j)[c];
            }
    assert((ctx.d1 * ctx.d0).is_zero());

    ctx.boundaries = column_basis(ctx.d0);
    RatMatrix cocycles = kernel_basis(ctx.d1);
    RatMatrix span = ctx.boundaries;
    std::size_t cur = span.cols();
    std::vector<RatVec> reps;
    for (std::size_t c = 0; c < cocycles.cols(); ++c) {
        RatMatrix cand = hstack(span, single_col(col_of(cocycles, c)));
        if (rank(cand) > cur) {
            reps.push_back(col_of(cocycles, c));
            span = std::move(cand);
            ++cur;
        }
    }
    ctx.reps = RatMatrix(n * n, reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
        for (std::size_t r = 0; r < n * n; ++r) ctx.reps.at(r, c) = reps[c][r];
    return ctx;
}

L2Algebra gl_of_modcat(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    std::vector<RatMatrix> ders = derivations(a);
    const std::size_t k = ders.size();
    RatMatrix dermat(n * n, k);
    for (std::size_t c = 0; c < k; ++c) {
        RatVec v = vec_of(ders[c]);
        for (std::size_t r = 0; r < n * n; ++r) dermat.at(r, c) = v[r];
    }
    auto coords = [&](const RatMatrix& m) {
        RatSolution sol = solve_linear(dermat, vec_of(m));
        assert(sol.solvable);
        return sol.particular;
    };

    L2Algebra g = L2Algebra::zero(n, k);
    g.l1 = RatMatrix(k, n);
    for (std::size_t h = 0; h < n; ++h) {
        RatVec c = coords(a.left_mult(basis_vec(n, h)) - a.right_mult(basis_vec(n, h)));
        for (std::size_t r = 0; r < k; ++r) g.l1.at(r, h) = c[r];
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g.l2_00[i * k + j] = coords(ders[i] * ders[j] - ders[j] * ders[i]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t h = 0; h < n; ++h) g.l2_0m[i * n + h] = col_of(ders[i], h);
    return g;
}

FinDimAlgebra enveloping(const FinDimAlgebra& a) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    FinDimAlgebra e;
    e.dim = n * n;
    e.mult.assign(e.dim * e.dim, RatVec(e.dim));
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    // (a x b)(a' x b') = aa' x b'b: the second leg multiplies
                    // in the opposite order.
                    RatVec& out = e.mult[(i1 * n + j1) * e.dim + (i2 * n + j2)];
                    const RatVec& pa = a.mult_at(i1, i2);
                    const RatVec& pb = a.mult_at(j2, j1);
                    for (std::size_t s = 0; s < n; ++s) {
                        if (pa[s] == 0) continue;
                        for (std::size_t t = 0; t < n; ++t) out[s * n + t] = pa[s] * pb[t];
                    }
                }
    e.unit.assign(e.dim, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.unit[i * n + j] = a.unit[i] * a.unit[j];
    return e;
}

FDModule regular_bimodule(const FinDimAlgebra& a) {
    const std::size_t n = a.dim;
    FDModule x;
    x.dim = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            x.action.push_back(a.left_mult(basis_vec(n, i)) * a.right_mult(basis_vec(n, j)));
    return x;
}

void validate_extension(const FinDimAlgebra& a, const ExtensionSeq& e) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    FinDimAlgebra env = enveloping(a);
    validate_module(env, e.middle);
    const std::size_t m = e.middle.dim;
    if (e.iota.rows() != m || e.iota.cols() != n)
        fail(ErrorKind::invalid_input, "extension: iota has the wrong shape");
    if (e.pi.rows() != n || e.pi.cols() != m)
        fail(ErrorKind::invalid_input, "extension: pi has the wrong shape");
    FDModule reg = regular_bimodule(a);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t idx = i * n + j;
            if (e.middle.action[idx] * e.iota != e.iota * reg.action[idx])
                fail(ErrorKind::invalid_input,
                     "extension: iota is not equivariant at " + pair_str(i, j));
            if (e.pi * e.middle.action[idx] != reg.action[idx] * e.pi)
                fail(ErrorKind::invalid_input,
                     "extension: pi is not equivariant at " + pair_str(i, j));
        }
    if (!(e.pi * e.iota).is_zero()) fail(ErrorKind::invalid_input, "extension: pi iota is not zero");
    if (rank(e.iota) != n) fail(ErrorKind::invalid_input, "extension: iota is not injective");
    if (rank(e.pi) != n) fail(ErrorKind::invalid_input, "extension: pi is not surjective");
    // With both ends of dimension n, exactness in the middle is the rank
    // condition dim ker pi = dim im iota, i.e. the middle has dimension 2n.
    if (m != 2 * n) fail(ErrorKind::invalid_input, "extension: middle dimension breaks exactness");
}

namespace {

// A plus A with the action twisted by a derivation-valued lower block:
// a.(x,y).b = (axb, ayb + t(a)xb). t = 0 gives the split extension.
ExtensionSeq two_copy_extension(const FinDimAlgebra& a, const RatMatrix& t) {
    const std::size_t n = a.dim;
    ExtensionSeq e;
    e.middle.dim = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix li = a.left_mult(basis_vec(n, i));
        RatMatrix ti = a.left_mult(col_of(t, i));
        for (std::size_t j = 0; j < n; ++j) {
            RatMatrix rj = a.right_mult(basis_vec(n, j));
            RatMatrix act(2 * n, 2 * n);
            RatMatrix diag = li * rj;
            RatMatrix low = ti * rj;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    act.at(r, c) = diag.at(r, c);
                    act.at(n + r, n + c) = diag.at(r, c);
                    act.at(n + r, c) = low.at(r, c);
                }
            e.middle.action.push_back(act);
        }
    }
    e.iota = RatMatrix(2 * n, n);
    e.pi = RatMatrix(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        e.iota.at(n + i, i) = 1;
        e.pi.at(i, i) = 1;
    }
    return e;
}

} // namespace

ExtensionSeq split_extension(const FinDimAlgebra& a) {
    validate_algebra(a);
    return two_copy_extension(a, RatMatrix(a.dim, a.dim));
}

ExtensionSeq baer_inverse(const FinDimAlgebra& a, const ExtensionSeq& e) {
    validate_extension(a, e);
    return {e.middle, -e.iota, e.pi};
}

std::optional<RatMatrix> find_splitting(const FinDimAlgebra& a, const ExtensionSeq& e) {
    validate_extension(a, e);
    const std::size_t n = a.dim;
    const std::size_t m = e.middle.dim;
    FDModule reg = regular_bimodule(a);
    // Unknown section s with pi s = id and s equivariant for every basis
    // element of the enveloping algebra.
    RatMatrix sys(n * n + n * n * m * n, m * n);
    RatVec rhs(sys.rows());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = p * n + c;
            for (std::size_t r = 0; r < m; ++r) sys.at(row, r * n + c) += e.pi.at(p, r);
            rhs[row] = (p == c) ? 1 : 0;
        }
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const RatMatrix& act = e.middle.action[idx];
        const RatMatrix& b = reg.action[idx];
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = n * n + (idx * m + p) * n + c;
                for (std::size_t r = 0; r < m; ++r) sys.at(row, r * n + c) += act.at(p, r);
                for (std::size_t q = 0; q < n; ++q) sys.at(row, p * n + q) -= b.at(q, c);
            }
    }
    RatSolution sol = solve_linear(sys, rhs);
    if (!sol.solvable) return std::nullopt;
    return mat_of(sol.particular, m, n);
}

RatVec extension_class(const FinDimAlgebra& a, const Ext1Context& ctx, const ExtensionSeq& e) {
    validate_extension(a, e);
    const std::size_t n = a.dim;
    if (ctx.n != n)
        fail(ErrorKind::dimension_mismatch, "extension class: context belongs to a different algebra");
    // Deterministic lift of the unit through pi; the class does not depend
    // on the lift because changing it moves the cocycle by a coboundary.
    RatSolution usol = solve_linear(e.pi, a.unit);
    assert(usol.solvable);
    const RatVec u = usol.particular;

    auto side_action = [&](std::size_t c, bool left) {
        RatMatrix m(e.middle.dim, e.middle.dim);
        for (std::size_t j = 0; j < n; ++j) {
            if (a.unit[j] == 0) continue;
            const std::size_t idx = left ? c * n + j : j * n + c;
            m = m + a.unit[j] * e.middle.action[idx];
        }
        return m;
    };

    RatMatrix f(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        RatVec w = side_action(c, true) * u - side_action(c, false) * u;
        RatSolution xs = solve_linear(e.iota, w);
        assert(xs.solvable);
        for (std::size_t r = 0; r < n; ++r) f.at(r, c) = xs.particular[r];
    }
    return ctx.class_coords(f);
}

ExtensionSeq baer_sum(const FinDimAlgebra& a, const ExtensionSeq& e1, const ExtensionSeq& e2) {
    validate_extension(a, e1);
    validate_extension(a, e2);
    const std::size_t n = a.dim;
    const std::size_t m1 = e1.middle.dim;
    const std::size_t m2 = e2.middle.dim;

    // Pullback along the diagonal of A: pairs with matching projections.
    RatMatrix kb = kernel_basis(hstack(e1.pi, -e2.pi));
    const std::size_t kd = kb.cols();
    // Pushout along addition: kill the antidiagonal copy of the sub term.
    RatMatrix antik = coords_in(kb, vstack(e1.iota, -e2.iota));
    QuotientCoords q = quotient_by(antik, kd);

    ExtensionSeq out;
    out.middle.dim = q.comp.cols();
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        RatMatrix big = block_diag(e1.middle.action[idx], e2.middle.action[idx]);
        RatMatrix actk = coords_in(kb, big * kb);
        out.middle.action.push_back(q.proj * actk * q.comp);
    }
    RatMatrix emb(m1 + m2, n);
    for (std::size_t r = 0; r < m1; ++r)
        for (std::size_t c = 0; c < n; ++c) emb.at(r, c) = e1.iota.at(r, c);
    out.iota = q.proj * coords_in(kb, emb);
    RatMatrix rep = kb * q.comp;
    RatMatrix top(m1, out.middle.dim);
    for (std::size_t r = 0; r < m1; ++r)
        for (std::size_t c = 0; c < out.middle.dim; ++c) top.at(r, c) = rep.at(r, c);
    out.pi = e1.pi * top;
    return out;
}

PiResult pi_map(const FinDimAlgebra& a, const RatMatrix& d) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    if (d.rows() != n || d.cols() != n)
        fail(ErrorKind::dimension_mismatch, "pi map: derivation matrix has the wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (d * a.mult_at(i, j) !=
                a.mul(col_of(d, i), basis_vec(n, j)) + a.mul(basis_vec(n, i), col_of(d, j)))
                fail(ErrorKind::invalid_input,
                     "pi map: the input is not a derivation at " + pair_str(i, j));
    PiResult res;
    res.ext = two_copy_extension(a, d);
    res.class_coords = extension_class(a, ext1_bimodule(a), res.ext);
    return res;
}

Trunc22Matrix trunc22_mul(const Trunc22Matrix& x, const Trunc22Matrix& y) {
    return {x.m0 * y.m0, x.m0 * y.m1 + x.m1 * y.m0, x.m0 * y.m2 + x.m2 * y.m0,
            x.m0 * y.m12 + x.m12 * y.m0 + x.m1 * y.m2 + x.m2 * y.m1};
}

Trunc22Matrix dual_number_commutator(const FinDimAlgebra& a, const RatMatrix& d1,
                                     const RatMatrix& d2) {
    validate_algebra(a);
    const std::size_t n = a.dim;
    if (d1.rows() != n || d1.cols() != n || d2.rows() != n || d2.cols() != n)
        fail(ErrorKind::dimension_mismatch, "dual-number commutator: matrices must be dim x dim");
    const RatMatrix id = RatMatrix::identity(n);
    const RatMatrix z(n, n);
    Trunc22Matrix out = trunc22_mul(trunc22_mul(Trunc22Matrix{id, d1, z, z}, {id, z, d2, z}),
                                    trunc22_mul(Trunc22Matrix{id, -d1, z, z}, {id, z, -d2, z}));
    assert(out.m0 == id && out.m1.is_zero() && out.m2.is_zero());
    assert(out.m12 == d1 * d2 - d2 * d1);
    return out;
}

namespace {

// The remaining corners of the dual-number square. Basis orders: the
// rational line {1}; the two-variable truncation {1, e1, e2, e1e2}; the
// fiber corner {1, e1, e2} where e1e2 has been killed.
FinDimAlgebra rational_line() {
    FinDimAlgebra a;
    a.dim = 1;
    a.mult.assign(1, basis_vec(1, 0));
    a.unit = basis_vec(1, 0);
    return a;
}

FinDimAlgebra two_eps_full() {
    FinDimAlgebra a;
    a.dim = 4;
    a.mult.assign(16, RatVec(4));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.mult[i * 4 + j][k] = 1; };
    for (std::size_t j = 0; j < 4; ++j) {
        set(0, j, j);
        if (j != 0) set(j, 0, j);
    }
    set(1, 2, 3);
    set(2, 1, 3);
    a.unit = basis_vec(4, 0);
    return a;
}

FinDimAlgebra two_eps_cut() {
    FinDimAlgebra a;
    a.dim = 3;
    a.mult.assign(9, RatVec(3));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.mult[i * 3 + j][k] = 1; };
    for (std::size_t j = 0; j < 3; ++j) {
        set(0, j, j);
        if (j != 0) set(j, 0, j);
    }
    a.unit = basis_vec(3, 0);
    return a;
}

RatMatrix kron_left_identity(std::size_t blocks, const RatMatrix& f) {
    RatMatrix m(blocks * f.rows(), blocks * f.cols());
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t c = 0; c < f.cols(); ++c)
                m.at(b * f.rows() + r, b * f.cols() + c) = f.at(r, c);
    return m;
}

// Base change of a module along an algebra map f: S -> B, realized as the
// quotient of B tensor X by the bilinearity relations
// b tensor s.x - b f(s) tensor x. Ambient index b*X.dim+u.
struct Pushed {
    FDModule mod;   // over B
    RatMatrix can;  // mod.dim x X.dim, the canonical map x -> 1 tensor x
    RatMatrix comp; // ambient x mod.dim, quotient representatives
    RatMatrix rels; // ambient x relation count
};

Pushed tensor_over(const FinDimAlgebra& s, const FinDimAlgebra& b, const RatMatrix& f,
                   const FDModule& x) {
    const std::size_t nb = b.dim, ns = s.dim, mx = x.dim;
    const std::size_t w = nb * mx;
    RatMatrix rels(w, nb * ns * mx);
    std::size_t rc = 0;
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t si = 0; si < ns; ++si) {
            RatVec prod = b.mul(basis_vec(nb, bi), col_of(f, si));
            for (std::size_t u = 0; u < mx; ++u) {
                for (std::size_t beta = 0; beta < nb; ++beta)
                    rels.at(beta * mx + u, rc) += prod[beta];
                for (std::size_t v = 0; v < mx; ++v)
                    rels.at(bi * mx + v, rc) -= x.action[si].at(v, u);
                ++rc;
            }
        }
    QuotientCoords q = quotient_by(rels, w);

    Pushed out;
    out.mod.dim = q.comp.cols();
    for (std::size_t beta = 0; beta < nb; ++beta) {
        RatMatrix amb(w, w);
        for (std::size_t bi = 0; bi < nb; ++bi) {
            const RatVec& prod = b.mult_at(beta, bi);
            for (std::size_t gamma = 0; gamma < nb; ++gamma) {
                if (prod[gamma] == 0) continue;
                for (std::size_t u = 0; u < mx; ++u)
                    amb.at(gamma * mx + u, bi * mx + u) = prod[gamma];
            }
        }
        out.mod.action.push_back(q.proj * amb * q.comp);
    }
    RatMatrix emb(w, mx);
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (std::size_t u = 0; u < mx; ++u) emb.at(bi * mx + u, u) = b.unit[bi];
    out.can = q.proj * emb;
    out.comp = q.comp;
    out.rels = std::move(rels);
    return out;
}

// The canonical comparison between the two base changes of x along equal
// composite maps: the unique equivariant matrix matching the generator
// images. Existence and bijectivity are forced; failure here means the
// square data is inconsistent.
RatMatrix comparison_iso(const FinDimAlgebra& t0, const Pushed& left, const RatMatrix& gen_left,
                         const Pushed& right, const RatMatrix& gen_right) {
    const std::size_t ti = left.mod.dim, tj = right.mod.dim, m = gen_left.cols();
    RatMatrix sys(tj * m + t0.dim * tj * ti, tj * ti);
    RatVec rhs(sys.rows());
    for (std::size_t r = 0; r < tj; ++r)
        for (std::size_t u = 0; u < m; ++u) {
            const std::size_t row = r * m + u;
            for (std::size_t c = 0; c < ti; ++c) sys.at(row, r * ti + c) = gen_left.at(c, u);
            rhs[row] = gen_right.at(r, u);
        }
    std::size_t row = tj * m;
    for (std::size_t beta = 0; beta < t0.dim; ++beta) {
        const RatMatrix& al = left.mod.action[beta];
        const RatMatrix& ar = right.mod.action[beta];
        for (std::size_t r = 0; r < tj; ++r)
            for (std::size_t c = 0; c < ti; ++c) {
                for (std::size_t k = 0; k < ti; ++k) sys.at(row, r * ti + k) += al.at(k, c);
                for (std::size_t k = 0; k < tj; ++k) sys.at(row, k * ti + c) -= ar.at(r, k);
                ++row;
            }
    }
    RatSolution sol = solve_linear(sys, rhs);
    if (!sol.solvable || ti != tj)
        fail(ErrorKind::identity_violation,
             "goodness square: the composite base changes do not agree");
    RatMatrix phi = mat_of(sol.particular, tj, ti);
    if (rank(phi) != ti)
        fail(ErrorKind::identity_violation,
             "goodness square: the comparison map is not invertible");
    return phi;
}

} // namespace

CheckReport goodness_square_check(const FinDimAlgebra& a, const std::vector<FDModule>& samples) {
    validate_algebra(a);
    if (!is_commutative(a))
        fail(ErrorKind::unsupported, "goodness square: coefficient algebra must be commutative");
    const std::size_t na = a.dim;

    const FinDimAlgebra t3 = tensor_algebra(a, dual_numbers());
    const FinDimAlgebra t1 = tensor_algebra(a, rational_line());
    const FinDimAlgebra t2 = tensor_algebra(a, two_eps_full());
    const FinDimAlgebra t0 = tensor_algebra(a, two_eps_cut());

    const RatMatrix pm = kron_left_identity(na, RatMatrix::from_rows({{1, 0}}));
    const RatMatrix qm =
        kron_left_identity(na, RatMatrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
    const RatMatrix im = kron_left_identity(na, RatMatrix::from_rows({{1}, {0}, {0}}));
    const RatMatrix jm = kron_left_identity(
        na, RatMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
    assert(im * pm == jm * qm);

    bool unit_ok = true, c1_ok = true, c2_ok = true;
    std::string unit_w, c1_w, c2_w;

    for (std::size_t si = 0; si < samples.size(); ++si) {
        const FDModule& x = samples[si];
        validate_module(t3, x);
        const std::string tag = "sample " + std::to_string(si);

        Pushed xp = tensor_over(t3, t1, pm, x);
        Pushed xq = tensor_over(t3, t2, qm, x);
        Pushed ixp = tensor_over(t1, t0, im, xp.mod);
        Pushed jxq = tensor_over(t2, t0, jm, xq.mod);
        RatMatrix phi = comparison_iso(t0, ixp, ixp.can * xp.can, jxq, jxq.can * xq.can);

        // The fiber product over the shared restriction, with the ambient
        // coordinates of X_p + X_q.
        const std::size_t dx = xp.mod.dim, dy = xq.mod.dim;
        RatMatrix mapy = rat_inverse(phi) * jxq.can;
        RatMatrix kb = kernel_basis(hstack(ixp.can, -mapy));
        const std::size_t gk = kb.cols();
        FDModule gf;
        gf.dim = gk;
        for (std::size_t r = 0; r < t3.dim; ++r) {
            RatMatrix big = block_diag(xp.mod.act(col_of(pm, r)), xq.mod.act(col_of(qm, r)));
            gf.action.push_back(coords_in(kb, big * kb));
        }

        if (unit_ok) {
            RatMatrix eta = coords_in(kb, vstack(xp.can, xq.can));
            bool ok = gk == x.dim && rank(eta) == x.dim;
            for (std::size_t r = 0; ok && r < t3.dim; ++r)
                ok = eta * x.action[r] == gf.action[r] * eta;
            if (!ok) {
                unit_ok = false;
                unit_w = tag;
            }
        }

        // Counit components on representatives: project a fiber-product
        // element to either leg and act by the outer scalar.
        auto counit_ok = [&](const FinDimAlgebra& tb, const RatMatrix& fm, const Pushed& target,
                             std::size_t off, std::size_t td) {
            Pushed pk = tensor_over(t3, tb, fm, gf);
            RatMatrix amb(td, tb.dim * gk);
            for (std::size_t bi = 0; bi < tb.dim; ++bi)
                for (std::size_t c = 0; c < gk; ++c) {
                    RatVec part(td);
                    for (std::size_t r = 0; r < td; ++r) part[r] = kb.at(off + r, c);
                    RatVec img = target.mod.action[bi] * part;
                    for (std::size_t r = 0; r < td; ++r) amb.at(r, bi * gk + c) = img[r];
                }
            assert((amb * pk.rels).is_zero());
            RatMatrix cu = amb * pk.comp;
            bool ok = pk.mod.dim == td && rank(cu) == td;
            for (std::size_t bi = 0; ok && bi < tb.dim; ++bi)
                ok = cu * pk.mod.action[bi] == target.mod.action[bi] * cu;
            return ok;
        };
        if (c1_ok && !counit_ok(t1, pm, xp, 0, dx)) {
            c1_ok = false;
            c1_w = tag;
        }
        if (c2_ok && !counit_ok(t2, qm, xq, dx, dy)) {
            c2_ok = false;
            c2_w = tag;
        }
    }

    CheckReport rep;
    rep.add("unit_isomorphism", unit_ok, unit_w);
    rep.add("counit_first_component", c1_ok, c1_w);
    rep.add("counit_second_component", c2_ok, c2_w);
    return rep;
}

} // namespace cat2alg
