// Finite-dimensional algebras over Q and the desk-scale models built on
// them: center and derivations, first Hochschild cohomology two ways, the
// derivation 2-term algebra of the module category, self-extensions of the
// regular bimodule with Baer sums, dual-number commutators, and the
// unit/counit checks for the fiber-product adjunction over the square of
// dual-number base changes.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cat2alg/exactlin.hpp"
#include "cat2alg/linf2.hpp"
#include "cat2alg/report.hpp"
#include "cat2alg/rng.hpp"

namespace cat2alg {

// Structure constants on a fixed basis: mult[i*dim+j] holds the
// coordinates of the product of basis elements i and j.
struct FinDimAlgebra {
    std::size_t dim = 0;
    std::vector<RatVec> mult;
    RatVec unit;

    const RatVec& mult_at(std::size_t i, std::size_t j) const { return mult[i * dim + j]; }

    // Bilinear extension of the structure constants.
    RatVec mul(const RatVec& x, const RatVec& y) const;

    // Matrices of left and right multiplication by a fixed element.
    RatMatrix left_mult(const RatVec& x) const;
    RatMatrix right_mult(const RatVec& x) const;
};

// Shape, associativity on basis triples, and both unit laws; throws
// Error(invalid_input) with the offending triple.
void validate_algebra(const FinDimAlgebra& a);

bool is_commutative(const FinDimAlgebra& a);

// Q[e]/(e^2) on the basis {1, e}.
FinDimAlgebra dual_numbers();

// A tensor B on the basis e_i tensor f_j at index i*B.dim+j.
FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b);

// Base change of the module category: the same tensor construction, but
// restricted to commutative B; throws Error(unsupported) otherwise.
FinDimAlgebra base_change(const FinDimAlgebra& a, const FinDimAlgebra& b);

// Left module on a fixed basis: one action matrix per algebra basis
// element, extended linearly.
struct FDModule {
    std::size_t dim = 0;
    std::vector<RatMatrix> action;

    // Matrix of the action of an arbitrary algebra element.
    RatMatrix act(const RatVec& x) const;
};

// Unital representation property on basis pairs; throws
// Error(invalid_input) with the offending pair.
void validate_module(const FinDimAlgebra& a, const FDModule& x);

// A acting on itself from the left.
FDModule regular_module(const FinDimAlgebra& a);

// Pushforward along the unit D -> Q of a module over A tensor D: the
// cokernel of the epsilon action, with the inherited A-action.
FDModule dual_pushforward(const FinDimAlgebra& a, const FDModule& x);

// Deterministic sample stream of modules over A tensor D for the
// adjunction checks: a free A-module of rank at most max_rank with a
// random conjugated square-zero A-linear differential as the epsilon
// action. A must be commutative.
FDModule sample_dual_module(const FinDimAlgebra& a, SplitMix64& rng, std::size_t max_rank);

// Basis of the center {z : ze_i = e_iz}, as columns.
RatMatrix center(const FinDimAlgebra& a);

// Basis of the Leibniz solutions D(ab) = D(a)b + aD(b), as matrices.
std::vector<RatMatrix> derivations(const FinDimAlgebra& a);

// Basis of the span of the inner derivations [e_i, -].
std::vector<RatMatrix> inner_derivations(const FinDimAlgebra& a);

// Derivations modulo inner derivations, with the chosen coset
// representatives drawn from the derivation basis.
struct HH1 {
    std::vector<RatMatrix> der_basis;
    std::vector<RatMatrix> inner_basis;
    std::vector<RatMatrix> coset_basis;

    std::size_t dim() const { return coset_basis.size(); }
};

HH1 hh1(const FinDimAlgebra& a);

// Degree 1 cohomology of the truncated complex
//   A -> Hom(A,A) -> Hom(A tensor A, A)
// with d0(m)(a) = am - ma and d1(f)(a,b) = a f(b) - f(ab) + f(a) b.
// Keeps the cochain-level data so extension classes can be expressed in
// fixed coordinates. Linear maps A -> A are vectorized row-major, entry
// (r,c) at index r*dim+c; the degree 2 side indexes value coordinate r of
// the pair (i,j) at (i*dim+j)*dim+r.
struct Ext1Context {
    std::size_t n = 0;
    RatMatrix d0;         // n^2 x n
    RatMatrix d1;         // n^3 x n^2
    RatMatrix boundaries; // columns: basis of im d0
    RatMatrix reps;       // columns: cocycles completing the boundaries

    std::size_t dim() const { return reps.cols(); }

    // Coordinates of a cocycle f (as a matrix) in the reps basis modulo
    // boundaries; throws Error(invalid_input) if f is not a cocycle.
    RatVec class_coords(const RatMatrix& f) const;
};

Ext1Context ext1_bimodule(const FinDimAlgebra& a);

// The 2-term algebra A -> Der(A) with the commutator bracket, the
// evaluation action in degree -1, and no ternary bracket. Cohomology is
// the center in degree -1 and derivations modulo inner in degree 0.
L2Algebra gl_of_modcat(const FinDimAlgebra& a);

// A tensor A-opposite; basis pairs at index i*dim+j. Left modules over it
// are the A-bimodules, with A itself acting by two-sided multiplication.
FinDimAlgebra enveloping(const FinDimAlgebra& a);

FDModule regular_bimodule(const FinDimAlgebra& a);

// Self-extension of the regular bimodule: a module over the enveloping
// algebra between two copies of A. iota embeds the sub copy, pi projects
// onto the quotient copy.
struct ExtensionSeq {
    FDModule middle;
    RatMatrix iota; // middle.dim x a.dim
    RatMatrix pi;   // a.dim x middle.dim
};

// Module validity, equivariance of both maps, pi iota = 0, injectivity,
// surjectivity, and middle exactness; throws Error(invalid_input).
void validate_extension(const FinDimAlgebra& a, const ExtensionSeq& e);

ExtensionSeq split_extension(const FinDimAlgebra& a);

// Negating the embedding inverts the extension class.
ExtensionSeq baer_inverse(const FinDimAlgebra& a, const ExtensionSeq& e);

// An enveloping-linear section of pi, when one exists. Searching for it is
// an independent splitting criterion: a splitting exists exactly for the
// zero class.
std::optional<RatMatrix> find_splitting(const FinDimAlgebra& a, const ExtensionSeq& e);

// The cocycle of the extension in the fixed coordinates of ctx: lift the
// unit through pi deterministically, measure the two-sided action defect,
// pull it back through iota.
RatVec extension_class(const FinDimAlgebra& a, const Ext1Context& ctx, const ExtensionSeq& e);

// Pullback along the diagonal followed by pushout along addition: the
// kernel of [pi1, -pi2] modulo the antidiagonal copy of A.
ExtensionSeq baer_sum(const FinDimAlgebra& a, const ExtensionSeq& e1, const ExtensionSeq& e2);

// The derivation D turned into a self-extension: A plus A with
// a.(x,y).b = (axb, ayb + D(a)xb), together with its class coordinates.
// Throws Error(invalid_input) if D is not a derivation.
struct PiResult {
    ExtensionSeq ext;
    RatVec class_coords;
};

PiResult pi_map(const FinDimAlgebra& a, const RatMatrix& d);

// Matrix over Q[e1,e2]/(e1^2,e2^2) split into coefficient blocks.
struct Trunc22Matrix {
    RatMatrix m0, m1, m2, m12;
};

Trunc22Matrix trunc22_mul(const Trunc22Matrix& x, const Trunc22Matrix& y);

// (1+e1 D)(1+e2 D')(1-e1 D)(1-e2 D') computed by truncated-polynomial
// matrix arithmetic. The result is asserted to be
// 1 + e1 e2 (D D' - D' D), which is forced by e^2 = 0.
Trunc22Matrix dual_number_commutator(const FinDimAlgebra& a, const RatMatrix& d1,
                                     const RatMatrix& d2);

// The fiber-product adjunction over the square
//    D ---- e maps to e1 e2 ----> D tensor D
//    |                               |
//  e maps to 0                kill e1 e2
//    |                               |
//    Q ---- unit inclusion ---> D cross D
// all base-changed along the commutative algebra a. For every sample
// (a module over A tensor D) the unit X -> GF(X) and both counit
// components FG(F X) -> F X are checked to be equivariant bijections.
// Samples that are not valid modules throw Error(invalid_input).
CheckReport goodness_square_check(const FinDimAlgebra& a, const std::vector<FDModule>& samples);

} // namespace cat2alg
