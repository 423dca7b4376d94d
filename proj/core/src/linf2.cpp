#include "cat2alg/linf2.hpp"

#include <string>

namespace cat2alg {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> ix) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i : ix) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + ")";
}

RatVec zero_vec(std::size_t n) { return RatVec(n); }

} // namespace

L2Algebra L2Algebra::zero(std::size_t n1, std::size_t n0) {
    L2Algebra a;
    a.n1 = n1;
    a.n0 = n0;
    a.l1 = RatMatrix(n0, n1);
    a.l2_00.assign(n0 * n0, zero_vec(n0));
    a.l2_0m.assign(n0 * n1, zero_vec(n1));
    a.l3.assign(n0 * n0 * n0, zero_vec(n1));
    return a;
}

RatVec L2Algebra::bracket00(const RatVec& x, const RatVec& y) const {
    RatVec out(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n0; ++j) {
            Rat c = x[i] * y[j];
            if (c == 0) continue;
            const RatVec& v = l2_00_at(i, j);
            for (std::size_t t = 0; t < n0; ++t) out[t] += c * v[t];
        }
    }
    return out;
}

RatVec L2Algebra::bracket0m(const RatVec& x, const RatVec& h) const {
    RatVec out(n1);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t u = 0; u < n1; ++u) {
            Rat c = x[i] * h[u];
            if (c == 0) continue;
            const RatVec& v = l2_0m_at(i, u);
            for (std::size_t t = 0; t < n1; ++t) out[t] += c * v[t];
        }
    }
    return out;
}

RatVec L2Algebra::l3_eval(const RatVec& x, const RatVec& y, const RatVec& z) const {
    RatVec out(n1);
    for (std::size_t i = 0; i < n0; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n0; ++j) {
            if (y[j] == 0) continue;
            Rat cij = x[i] * y[j];
            for (std::size_t k = 0; k < n0; ++k) {
                Rat c = cij * z[k];
                if (c == 0) continue;
                const RatVec& v = l3_at(i, j, k);
                for (std::size_t t = 0; t < n1; ++t) out[t] += c * v[t];
            }
        }
    }
    return out;
}

void validate_l2_shape(const L2Algebra& a) {
    if (a.l1.rows() != a.n0 || a.l1.cols() != a.n1)
        fail(ErrorKind::invalid_input, "l1 must be an n0 x n1 matrix");
    if (a.l2_00.size() != a.n0 * a.n0)
        fail(ErrorKind::invalid_input, "l2_00 must have one value per V^0 basis pair");
    for (const RatVec& v : a.l2_00)
        if (v.size() != a.n0) fail(ErrorKind::invalid_input, "l2_00 value has wrong dimension");
    if (a.l2_0m.size() != a.n0 * a.n1)
        fail(ErrorKind::invalid_input, "l2_0m must have one value per mixed basis pair");
    for (const RatVec& v : a.l2_0m)
        if (v.size() != a.n1) fail(ErrorKind::invalid_input, "l2_0m value has wrong dimension");
    if (a.l3.size() != a.n0 * a.n0 * a.n0)
        fail(ErrorKind::invalid_input, "l3 must have one value per V^0 basis triple");
    for (const RatVec& v : a.l3)
        if (v.size() != a.n1) fail(ErrorKind::invalid_input, "l3 value has wrong dimension");
}

CheckReport check_identities(const L2Algebra& a) {
    validate_l2_shape(a);
    CheckReport report;
    std::size_t n0 = a.n0, n1 = a.n1;

    auto basis0 = [&](std::size_t i) {
        RatVec v(n0);
        v[i] = 1;
        return v;
    };
    auto basis1 = [&](std::size_t h) {
        RatVec v(n1);
        v[h] = 1;
        return v;
    };
    auto l1v = [&](const RatVec& h) { return a.l1 * h; };

    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t j = 0; j <= i && ok; ++j)
            if (!is_zero(a.l2_00_at(i, j) + a.l2_00_at(j, i))) {
                ok = false;
                witness = "l2_00 at " + tuple_str({i, j});
            }
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t j = 0; j < n0 && ok; ++j)
            for (std::size_t k = 0; k < n0 && ok; ++k) {
                const RatVec& base = a.l3_at(i, j, k);
                if (!is_zero(a.l3_at(j, i, k) + base) || !is_zero(a.l3_at(i, k, j) + base) ||
                    !is_zero(a.l3_at(j, k, i) - base) || !is_zero(a.l3_at(k, i, j) - base) ||
                    !is_zero(a.l3_at(k, j, i) + base)) {
                    ok = false;
                    witness = "l3 at " + tuple_str({i, j, k});
                }
            }
    report.add("antisymmetry", ok, witness);

    // l1 commutes with the mixed bracket: l1 l2(x, h) = l2(x, l1 h).
    ok = true;
    witness.clear();
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t h = 0; h < n1 && ok; ++h) {
            RatVec lhs = l1v(a.l2_0m_at(i, h));
            RatVec rhs = a.bracket00(basis0(i), l1v(basis1(h)));
            if (!is_zero(lhs - rhs)) {
                ok = false;
                witness = tuple_str({i, h});
            }
        }
    report.add("differential_compatibility", ok, witness);

    // No identity constrains two degree -1 arguments in a 2-term algebra:
    // every bracket with two such arguments lands below degree -1.
    report.add("two_minus_one_arguments", true,
               "vacuous: all brackets on two degree -1 arguments vanish by degree");

    // Jacobi up to the differential of l3.
    ok = true;
    witness.clear();
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t j = 0; j < n0 && ok; ++j)
            for (std::size_t k = 0; k < n0 && ok; ++k) {
                RatVec x = basis0(i), y = basis0(j), z = basis0(k);
                RatVec lhs = a.bracket00(a.bracket00(x, y), z);
                lhs = lhs + a.bracket00(a.bracket00(y, z), x);
                lhs = lhs + a.bracket00(a.bracket00(z, x), y);
                RatVec rhs = l1v(a.l3_at(i, j, k));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    witness = tuple_str({i, j, k});
                }
            }
    report.add("jacobi_degree0", ok, witness);

    // Mixed Jacobi: two degree 0 arguments and one degree -1 argument.
    ok = true;
    witness.clear();
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t j = 0; j < n0 && ok; ++j)
            for (std::size_t h = 0; h < n1 && ok; ++h) {
                RatVec x = basis0(i), y = basis0(j), hv = basis1(h);
                RatVec lhs = a.bracket0m(a.l2_00_at(i, j), hv);
                lhs = lhs - a.bracket0m(x, a.bracket0m(y, hv));
                lhs = lhs + a.bracket0m(y, a.bracket0m(x, hv));
                RatVec rhs = a.l3_eval(x, y, l1v(hv));
                if (!is_zero(lhs - rhs)) {
                    ok = false;
                    witness = tuple_str({i, j, h});
                }
            }
    report.add("jacobi_mixed", ok, witness);

    // Coherence of l3 against l2 on basis quadruples of V^0, with the
    // cyclic group acting on the first three arguments.
    ok = true;
    witness.clear();
    for (std::size_t i = 0; i < n0 && ok; ++i)
        for (std::size_t j = 0; j < n0 && ok; ++j)
            for (std::size_t k = 0; k < n0 && ok; ++k)
                for (std::size_t w = 0; w < n0 && ok; ++w) {
                    RatVec wv = basis0(w);
                    RatVec lhs = -a.bracket0m(wv, a.l3_at(i, j, k));
                    RatVec rhs(a.n1);
                    std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                    for (auto& t : cyc) {
                        RatVec x = basis0(t[0]), y = basis0(t[1]), z = basis0(t[2]);
                        rhs = rhs + a.l3_eval(a.l2_00_at(t[0], t[1]), z, wv);
                        rhs = rhs + a.l3_eval(x, y, a.l2_00_at(t[2], w));
                        rhs = rhs - a.bracket0m(z, a.l3_eval(x, y, wv));
                    }
                    if (!is_zero(lhs - rhs)) {
                        ok = false;
                        witness = tuple_str({i, j, k, w});
                    }
                }
    report.add("l3_coherence", ok, witness);

    return report;
}

L2Algebra from_crossed_module(const CrossedModule& cm) {
    std::size_t n0 = cm.n0, n1 = cm.n1;
    if (cm.partial.rows() != n0 || cm.partial.cols() != n1)
        fail(ErrorKind::invalid_input, "partial must be an n0 x n1 matrix");
    if (cm.bracket.size() != n0 * n0)
        fail(ErrorKind::invalid_input, "bracket must have one value per basis pair");
    if (cm.action.size() != n0 * n1)
        fail(ErrorKind::invalid_input, "action must have one value per mixed basis pair");

    L2Algebra a = L2Algebra::zero(n1, n0);
    a.l1 = cm.partial;
    a.l2_00 = cm.bracket;
    a.l2_0m = cm.action;
    validate_l2_shape(a);

    auto basis0 = [&](std::size_t i) {
        RatVec v(n0);
        v[i] = 1;
        return v;
    };

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!is_zero(a.l2_00_at(i, j) + a.l2_00_at(j, i)))
                fail(ErrorKind::identity_violation,
                     "bracket is not antisymmetric at " + tuple_str({i, j}));

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t k = 0; k < n0; ++k) {
                RatVec jac = a.bracket00(a.l2_00_at(i, j), basis0(k));
                jac = jac + a.bracket00(a.l2_00_at(j, k), basis0(i));
                jac = jac + a.bracket00(a.l2_00_at(k, i), basis0(j));
                if (!is_zero(jac))
                    fail(ErrorKind::identity_violation,
                         "Jacobi identity fails at " + tuple_str({i, j, k}));
            }

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t h = 0; h < n1; ++h) {
                RatVec hv(n1);
                hv[h] = 1;
                RatVec lhs = a.bracket0m(a.l2_00_at(i, j), hv);
                RatVec rhs = a.bracket0m(basis0(i), a.l2_0m_at(j, h));
                rhs = rhs - a.bracket0m(basis0(j), a.l2_0m_at(i, h));
                if (!is_zero(lhs - rhs))
                    fail(ErrorKind::identity_violation,
                         "action is not a module structure at " + tuple_str({i, j, h}));
            }

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t h = 0; h < n1; ++h) {
            RatVec hv(n1);
            hv[h] = 1;
            RatVec lhs = a.l1 * a.l2_0m_at(i, h);
            RatVec rhs = a.bracket00(basis0(i), a.l1 * hv);
            if (!is_zero(lhs - rhs))
                fail(ErrorKind::identity_violation,
                     "differential is not equivariant at " + tuple_str({i, h}));
        }

    return a;
}

Cohomology2 cohomology(const L2Algebra& a) {
    validate_l2_shape(a);
    Cohomology2 out;
    out.hm1_basis = kernel_basis(a.l1);
    out.h0_basis = complement_basis(a.l1, a.n0);

    std::size_t dim = out.h0_basis.cols();
    // Coordinates in H^0: solve against [l1 | complement]; the complement
    // components of any solution are unique.
    RatMatrix mixed = hstack(a.l1, out.h0_basis);
    auto project = [&](const RatVec& v) {
        RatSolution s = solve_linear(mixed, v);
        if (!s.solvable) fail(ErrorKind::invalid_input, "complement does not span");
        RatVec coords(dim);
        for (std::size_t p = 0; p < dim; ++p) coords[p] = s.particular[a.n1 + p];
        return coords;
    };

    std::vector<RatVec> reps(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        RatVec v(a.n0);
        for (std::size_t t = 0; t < a.n0; ++t) v[t] = out.h0_basis.at(t, p);
        reps[p] = v;
    }

    out.h0_bracket.assign(dim * dim, RatVec(dim));
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q)
            out.h0_bracket[p * dim + q] = project(a.bracket00(reps[p], reps[q]));

    // The induced bracket must satisfy Jacobi on the nose: the Jacobiator
    // lands in the image of l1.
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t q = 0; q < dim; ++q)
            for (std::size_t r = 0; r < dim; ++r) {
                RatVec jac = a.bracket00(a.bracket00(reps[p], reps[q]), reps[r]);
                jac = jac + a.bracket00(a.bracket00(reps[q], reps[r]), reps[p]);
                jac = jac + a.bracket00(a.bracket00(reps[r], reps[p]), reps[q]);
                if (!is_zero(project(jac)))
                    fail(ErrorKind::identity_violation,
                         "induced bracket on H^0 is not a Lie bracket at " +
                             tuple_str({p, q, r}));
            }

    return out;
}

} // namespace cat2alg
