// 2-term L-infinity algebras over Q: a complex V^-1 -> V^0 with a binary
// bracket, a mixed bracket, and a ternary bracket, all given by their values
// on basis tuples. The identity checker evaluates every structure identity
// on basis tuples in exact arithmetic.
#pragma once

#include <cstddef>
#include <vector>

#include "cat2alg/exactlin.hpp"
#include "cat2alg/report.hpp"

namespace cat2alg {

struct L2Algebra {
    std::size_t n1 = 0; // dim V^-1
    std::size_t n0 = 0; // dim V^0
    RatMatrix l1;       // n0 x n1, the differential V^-1 -> V^0

    // Basis values: l2_00[i*n0+j] = l2(e_i, e_j) in V^0 (antisymmetric),
    // l2_0m[i*n1+h] = l2(e_i, f_h) in V^-1, and l3[(i*n0+j)*n0+k] =
    // l3(e_i, e_j, e_k) in V^-1 (totally antisymmetric). The bracket of a
    // degree -1 element with a degree 0 element is -l2_0m with the
    // arguments swapped.
    std::vector<RatVec> l2_00;
    std::vector<RatVec> l2_0m;
    std::vector<RatVec> l3;

    static L2Algebra zero(std::size_t n1, std::size_t n0);

    const RatVec& l2_00_at(std::size_t i, std::size_t j) const { return l2_00[i * n0 + j]; }
    const RatVec& l2_0m_at(std::size_t i, std::size_t h) const { return l2_0m[i * n1 + h]; }
    const RatVec& l3_at(std::size_t i, std::size_t j, std::size_t k) const {
        return l3[(i * n0 + j) * n0 + k];
    }

    // Multilinear extensions to arbitrary vectors.
    RatVec bracket00(const RatVec& x, const RatVec& y) const;
    RatVec bracket0m(const RatVec& x, const RatVec& h) const;
    RatVec l3_eval(const RatVec& x, const RatVec& y, const RatVec& z) const;
};

// Dimension bookkeeping; throws Error(invalid_input) with the offending
// table on mismatch.
void validate_l2_shape(const L2Algebra& a);

// All structure identities on basis tuples: antisymmetry, compatibility of
// the differential with both brackets, the two Jacobi identities controlled
// by l3, and the ternary coherence of l3 itself. The identity on two
// degree -1 arguments is vacuous here and reported as such.
CheckReport check_identities(const L2Algebra& a);

// A differential crossed module datum: a Lie algebra g on V^0, a g-module
// structure on V^-1, and an equivariant differential. Produces the strict
// 2-term algebra (l3 = 0); throws Error(identity_violation) with a witness
// when an axiom fails.
struct CrossedModule {
    std::size_t n1 = 0;
    std::size_t n0 = 0;
    RatMatrix partial;            // n0 x n1
    std::vector<RatVec> bracket;  // g bracket on basis pairs, antisymmetric
    std::vector<RatVec> action;   // action[i*n1+h] of e_i on f_h
};

L2Algebra from_crossed_module(const CrossedModule& cm);

// H^-1 = ker l1 and H^0 = coker l1 with the induced Lie bracket. The
// complement basis consists of standard basis vectors of V^0; coordinates
// on H^0 are taken in that basis.
struct Cohomology2 {
    RatMatrix hm1_basis;            // columns span ker l1 in V^-1
    RatMatrix h0_basis;             // columns: standard vectors completing im l1
    std::vector<RatVec> h0_bracket; // [p*dim+q], coordinates in h0_basis

    std::size_t hm1_dim() const { return hm1_basis.cols(); }
    std::size_t h0_dim() const { return h0_basis.cols(); }
};

Cohomology2 cohomology(const L2Algebra& a);

} // namespace cat2alg
