#include "cat2alg/picard.hpp"

#include <map>
#include <string>

namespace cat2alg {

namespace {

IntMatrix normalized_relations(const IntMatrix& rel, std::size_t gens) {
    if (rel.rows() == 0) return IntMatrix(0, gens);
    return rel;
}

} // namespace

void validate_complex(const Complex2& k) {
    const std::size_t n1 = k.n1();
    const std::size_t n0 = k.n0();
    if (k.rel_m1.rows() > 0 && k.rel_m1.cols() != n1)
        fail(ErrorKind::dimension_mismatch, "degree -1 relations have wrong width");
    if (k.rel_0.rows() > 0 && k.rel_0.cols() != n0)
        fail(ErrorKind::dimension_mismatch, "degree 0 relations have wrong width");

    if (k.ring == Ring::Q) {
        if (k.rel_m1.rows() > 0 || k.rel_0.rows() > 0)
            fail(ErrorKind::unsupported, "relations are only supported over Z");
        return;
    }

    IntMatrix d = int_differential(k);
    IntMatrix rel0 = normalized_relations(k.rel_0, n0);
    for (std::size_t r = 0; r < k.rel_m1.rows(); ++r) {
        IntVec row(n1);
        for (std::size_t j = 0; j < n1; ++j) row[j] = k.rel_m1.at(r, j);
        IntVec img = d * row;
        bool ok;
        if (rel0.rows() == 0) {
            ok = true;
            for (const Int& x : img)
                if (x != 0) ok = false;
        } else {
            ok = int_solve_linear(rel0.transposed(), img).solvable;
        }
        if (!ok)
            fail(ErrorKind::invalid_input,
                 "differential does not respect degree -1 relation " + std::to_string(r));
    }
}

IntMatrix int_differential(const Complex2& k) {
    IntMatrix d(k.n0(), k.n1());
    for (std::size_t i = 0; i < k.n0(); ++i)
        for (std::size_t j = 0; j < k.n1(); ++j) {
            const Rat& x = k.d.at(i, j);
            if (x.get_den() != 1)
                fail(ErrorKind::invalid_input, "differential must be integral over Z");
            d.at(i, j) = x.get_num();
        }
    return d;
}

ComplexHomotopy ch_pi(const Complex2& k) {
    validate_complex(k);
    ComplexHomotopy h;
    h.ring = k.ring;

    if (k.ring == Ring::Q) {
        std::size_t r = rank(k.d);
        h.pi0 = FinAbGroup::from_diagonal({}, k.n0() - r);
        h.pi1 = FinAbGroup::from_diagonal({}, k.n1() - r);
        return h;
    }

    const IntMatrix d = int_differential(k);
    const IntMatrix rel0 = normalized_relations(k.rel_0, k.n0());
    const IntMatrix rel1 = normalized_relations(k.rel_m1, k.n1());

    h.pi0 = cokernel(vstack(rel0, d.transposed()));

    // pi1 = {x : d x falls into the degree 0 relation lattice} / relations.
    // The solutions (x, t) of d x = rel0^T t form a saturated lattice; its
    // projection to the x block generates the preimage lattice L.
    IntMatrix block = hstack(d, -rel0.transposed());
    IntMatrix ker = int_kernel_basis(block);
    IntMatrix gens(k.n1(), ker.cols());
    for (std::size_t i = 0; i < k.n1(); ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) gens.at(i, j) = ker.at(i, j);

    // Lattice basis from the generators: with U G V = D the columns of
    // U^-1 D, i.e. d_j times the j-th column of U^-1, form a basis.
    SmithNormalForm s = smith_normal_form(gens);
    const std::size_t nmin = std::min(gens.rows(), gens.cols());
    std::size_t rk = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (s.D.at(i, i) != 0) ++rk;
    IntMatrix uinv = int_inverse(s.U);
    IntMatrix basis(k.n1(), rk);
    for (std::size_t i = 0; i < k.n1(); ++i)
        for (std::size_t j = 0; j < rk; ++j) basis.at(i, j) = uinv.at(i, j) * s.D.at(j, j);

    IntMatrix relcoords(rel1.rows(), rk);
    for (std::size_t r = 0; r < rel1.rows(); ++r) {
        IntVec row(k.n1());
        for (std::size_t j = 0; j < k.n1(); ++j) row[j] = rel1.at(r, j);
        IntSolution sol = int_solve_linear(basis, row);
        if (!sol.solvable)
            fail(ErrorKind::identity_violation,
                 "degree -1 relation escaped the kernel lattice");
        for (std::size_t j = 0; j < rk; ++j) relcoords.at(r, j) = sol.particular[j];
    }
    h.pi1 = cokernel(relcoords);
    return h;
}

Complex2 hom_flat(const Complex2& k, const Complex2& kp) {
    validate_complex(k);
    validate_complex(kp);
    if (k.ring != Ring::Q || kp.ring != Ring::Q)
        fail(ErrorKind::unsupported, "hom_flat is only implemented over Q");

    const std::size_t n1 = k.n1(), n0 = k.n0();
    const std::size_t n1p = kp.n1(), n0p = kp.n0();
    const RatMatrix& d = k.d;
    const RatMatrix& dp = kp.d;

    // Chain-map constraint f0 d - d' f-1 = 0 on the variable vector
    // vec(f-1) (n1p x n1, row-major) followed by vec(f0) (n0p x n0).
    const std::size_t vars = n1p * n1 + n0p * n0;
    RatMatrix constraint(n0p * n1, vars);
    for (std::size_t a = 0; a < n0p; ++a)
        for (std::size_t b = 0; b < n1; ++b) {
            const std::size_t row = a * n1 + b;
            for (std::size_t e = 0; e < n1p; ++e)
                constraint.at(row, e * n1 + b) -= dp.at(a, e);
            for (std::size_t c = 0; c < n0; ++c)
                constraint.at(row, n1p * n1 + a * n0 + c) += d.at(c, b);
        }
    RatMatrix chainmaps = kernel_basis(constraint);

    // Degree -1 is Hom(K^0, K'^-1) with basis E_ec (index e * n0 + c);
    // the differential h -> (h d, d' h) lands in the chain maps.
    Complex2 out;
    out.ring = Ring::Q;
    out.d = RatMatrix(chainmaps.cols(), n1p * n0);
    for (std::size_t e = 0; e < n1p; ++e)
        for (std::size_t c = 0; c < n0; ++c) {
            RatVec v(vars);
            for (std::size_t b = 0; b < n1; ++b) v[e * n1 + b] = d.at(c, b);
            for (std::size_t a = 0; a < n0p; ++a)
                v[n1p * n1 + a * n0 + c] = dp.at(a, e);
            RatSolution sol = solve_linear(chainmaps, v);
            if (!sol.solvable)
                fail(ErrorKind::identity_violation,
                     "hom_flat: differential image escaped the chain-map space");
            for (std::size_t j = 0; j < chainmaps.cols(); ++j)
                out.d.at(j, e * n0 + c) = sol.particular[j];
        }
    out.rel_m1 = IntMatrix(0, out.n1());
    out.rel_0 = IntMatrix(0, out.n0());
    return out;
}

Complex2 tensor_flat(const Complex2& k, const Complex2& kp) {
    validate_complex(k);
    validate_complex(kp);
    if (k.ring != Ring::Q || kp.ring != Ring::Q)
        fail(ErrorKind::unsupported, "tensor_flat is only implemented over Q");

    const std::size_t n1 = k.n1(), n0 = k.n0();
    const std::size_t n1p = kp.n1(), n0p = kp.n0();
    const RatMatrix& d = k.d;
    const RatMatrix& dp = kp.d;

    // Ambient degree -1 space: K^-1 (x) K'^0 indexed by i * n0p + y, then
    // K^0 (x) K'^-1 indexed after an offset by x * n1p + j.
    const std::size_t w = n1 * n0p + n0 * n1p;
    const std::size_t off = n1 * n0p;

    RatMatrix dm2(w, n1 * n1p);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1p; ++j) {
            const std::size_t col = i * n1p + j;
            for (std::size_t y = 0; y < n0p; ++y) dm2.at(i * n0p + y, col) -= dp.at(y, j);
            for (std::size_t x = 0; x < n0; ++x) dm2.at(off + x * n1p + j, col) += d.at(x, i);
        }

    RatMatrix dm1(n0 * n0p, w);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t y = 0; y < n0p; ++y)
            for (std::size_t x = 0; x < n0; ++x)
                dm1.at(x * n0p + y, i * n0p + y) += d.at(x, i);
    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t j = 0; j < n1p; ++j)
            for (std::size_t y = 0; y < n0p; ++y)
                dm1.at(x * n0p + y, off + x * n1p + j) += dp.at(y, j);

    // Realize the quotient by im(dm2) on a complement basis; dm1 kills the
    // image, so restricting it to the complement computes the induced map.
    RatMatrix comp = complement_basis(dm2, w);

    Complex2 out;
    out.ring = Ring::Q;
    out.d = dm1 * comp;
    out.rel_m1 = IntMatrix(0, out.n1());
    out.rel_0 = IntMatrix(0, out.n0());
    return out;
}

bool pch_isomorphic(const Complex2& k, const IntVec& x, const IntVec& y) {
    validate_complex(k);
    if (x.size() != k.n0() || y.size() != k.n0())
        fail(ErrorKind::dimension_mismatch, "point has wrong length");
    if (k.ring == Ring::Q) {
        RatVec diff(k.n0());
        for (std::size_t i = 0; i < k.n0(); ++i) diff[i] = Rat(y[i] - x[i]);
        return solve_linear(k.d, diff).solvable;
    }
    IntVec diff(k.n0());
    for (std::size_t i = 0; i < k.n0(); ++i) diff[i] = y[i] - x[i];
    IntMatrix d = int_differential(k);
    IntMatrix rel0 = normalized_relations(k.rel_0, k.n0());
    IntMatrix block = hstack(d, rel0.transposed());
    return int_solve_linear(block, diff).solvable;
}

std::vector<std::vector<IntVec>> pch_iso_classes(const Complex2& k) {
    validate_complex(k);
    if (k.ring == Ring::Q) {
        if (k.n0() == 0) return {{IntVec{}}};
        fail(ErrorKind::enumeration_infeasible, "point enumeration over Q is infinite");
    }
    const std::size_t n0 = k.n0();
    const IntMatrix d = int_differential(k);
    const IntMatrix rel0 = normalized_relations(k.rel_0, n0);

    // x and y are the same point of K^0 iff U x and U y agree modulo the
    // Smith diagonal of the relation lattice; finiteness needs full rank.
    SmithNormalForm sk = smith_normal_form(rel0.transposed());
    std::vector<Int> moduli(n0);
    Int total = 1;
    for (std::size_t i = 0; i < n0; ++i) {
        moduli[i] = (i < std::min(n0, rel0.rows())) ? sk.D.at(i, i) : Int(0);
        if (moduli[i] == 0)
            fail(ErrorKind::enumeration_infeasible, "K^0 is infinite");
        total *= moduli[i];
    }
    if (total > 100000)
        fail(ErrorKind::enumeration_infeasible,
             "K^0 has " + total.get_str() + " elements; enumeration capped at 100000");

    IntMatrix uinv = int_inverse(sk.U);

    // Isomorphism classes are fibers of the quotient onto pi0; key each
    // point by its pi0 coordinates.
    IntMatrix join = hstack(rel0.transposed(), d);
    SmithNormalForm sq = smith_normal_form(join);
    std::vector<Int> qmod(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        qmod[i] = (i < std::min(n0, join.cols())) ? sq.D.at(i, i) : Int(0);
        if (qmod[i] == 0)
            fail(ErrorKind::identity_violation, "finite K^0 produced infinite pi0");
    }

    std::map<std::string, std::vector<IntVec>> buckets;
    IntVec w(n0);
    bool done = (total == 0);
    while (!done) {
        IntVec x = uinv * w;
        IntVec ux = sq.U * x;
        std::string key;
        for (std::size_t i = 0; i < n0; ++i) {
            Int r = ux[i] % qmod[i];
            if (r < 0) r += qmod[i];
            key += r.get_str();
            key += ',';
        }
        buckets[key].push_back(x);

        std::size_t pos = 0;
        while (pos < n0) {
            w[pos] += 1;
            if (w[pos] < moduli[pos]) break;
            w[pos] = 0;
            ++pos;
        }
        if (pos == n0) done = true;
    }

    std::vector<std::vector<IntVec>> classes;
    classes.reserve(buckets.size());
    for (auto& [key, members] : buckets) classes.push_back(std::move(members));
    return classes;
}

} // namespace cat2alg
