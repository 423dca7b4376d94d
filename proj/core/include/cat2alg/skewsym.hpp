// Pseudo Lie 2-algebra data and its skew-symmetrization. The pseudo bracket
// need not be antisymmetric; a symmetric defect s valued in degree -1
// measures the failure, and a halving correction turns the data into a
// genuine 2-term algebra. Everything is rational because the correction
// divides by 2 and by 4.
#pragma once

#include <cstddef>
#include <vector>

#include "cat2alg/exactlin.hpp"
#include "cat2alg/linf2.hpp"
#include "cat2alg/report.hpp"

namespace cat2alg {

// Tables on basis tuples, all stored row-major like L2Algebra. The two
// mixed blocks of the pseudo bracket are independent data: the conversion
// formulas apply the bracket to (degree -1, degree 0) pairs, and nothing
// in the defect identities ties that block to its mirror.
struct PseudoL2Data {
    std::size_t n1 = 0; // dim V^-1
    std::size_t n0 = 0; // dim V^0

    RatMatrix d; // n0 x n1, the differential V^-1 -> V^0

    std::vector<RatVec> lt2_00; // [i*n0+j], values in V^0
    std::vector<RatVec> lt2_0m; // [i*n1+h], values in V^-1
    std::vector<RatVec> lt2_m0; // [h*n0+i], values in V^-1
    std::vector<RatVec> s;      // [i*n0+j], values in V^-1, symmetric
    std::vector<RatVec> lt3;    // [(i*n0+j)*n0+k], values in V^-1, cyclic

    static PseudoL2Data zero(std::size_t n1, std::size_t n0);

    const RatVec& lt2_00_at(std::size_t i, std::size_t j) const { return lt2_00[i * n0 + j]; }
    const RatVec& lt2_0m_at(std::size_t i, std::size_t h) const { return lt2_0m[i * n1 + h]; }
    const RatVec& lt2_m0_at(std::size_t h, std::size_t i) const { return lt2_m0[h * n0 + i]; }
    const RatVec& s_at(std::size_t i, std::size_t j) const { return s[i * n0 + j]; }
    const RatVec& lt3_at(std::size_t i, std::size_t j, std::size_t k) const {
        return lt3[(i * n0 + j) * n0 + k];
    }

    // Multilinear extensions of the tables to coordinate vectors.
    RatVec bt00(const RatVec& x, const RatVec& y) const;
    RatVec btm0(const RatVec& h, const RatVec& x) const;
    RatVec s_eval(const RatVec& x, const RatVec& y) const;
    RatVec lt3_eval(const RatVec& x, const RatVec& y, const RatVec& z) const;
};

// Dimension bookkeeping; throws Error(dimension_mismatch) naming the
// offending table.
void validate_pseudo_shape(const PseudoL2Data& p);

// The defect identities on degree 0 basis tuples:
//   s_symmetric                s(x,y) = s(y,x)
//   antisymmetry_defect        lt2(x,y) + lt2(y,x) = d s(x,y)
//   jacobi_defect              sum_cyc lt2(lt2(x,y),z) = d lt3(x,y,z)
//   cyclic_invariance          lt3(x,y,z) = lt3(y,z,x)
//   l3_symmetric_part          lt3(x,y,z) + lt3(y,x,z)
//                                = lt2(s(x,y),z) + lt2(s(y,z),x) + lt2(s(z,x),y)
// The jacobiator identity of the pseudo structure has no closed displayed
// form here; it holds exactly when the skew-symmetrized output satisfies
// the quadruple coherence identity, so the final report item
// jacobiator_via_skew_output certifies it along that path (and says so by
// name). When a defect identity already fails, that item reports
// not-certified instead.
CheckReport check_pseudo(const PseudoL2Data& p);

// The halving correction: l1 = d, l2(x,y) = lt2(x,y) - (1/2) d s(x,y) with
// the (0,-1) mixed block copied unchanged, and
//   l3(x,y,z) = lt3(x,y,z) - (1/2) sum_cyc lt2(s(x,y),z)
//                          - (1/2) sum_cyc s(lt2(x,y),z)
//                          + (1/4) sum_cyc s(d s(x,y),z).
// Throws Error(identity_violation) naming the first defect identity that
// fails. The output bracket is antisymmetric and the output l3 totally
// antisymmetric whenever the defect identities hold; both are asserted.
L2Algebra skew_symmetrize(const PseudoL2Data& p);

// Inverse test-vector generator: perturbs a valid algebra by a symmetric
// q with values in V^-1, producing pseudo data that skew-symmetrizes back
// to the input tensor-for-tensor. The perturbation spreads q so that the
// defect identities hold: the 0-0 block gains d q(x,y), the (-1,0) block
// becomes -l2(x,h) + q(d h, x), s = 2q, and lt3 is solved from the l3
// formula by exact rearrangement. q is [i*n0+j] with RatVec(n1) entries;
// asymmetric or misshapen q throws Error(invalid_input).
PseudoL2Data perturb(const L2Algebra& a, const std::vector<RatVec>& q);

} // namespace cat2alg
