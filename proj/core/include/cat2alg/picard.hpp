// Two-term complexes concentrated in degrees -1 and 0, over Z (with finite
// presentations) or over Q, together with the operations the symmetric
// 2-group dictionary needs: homotopy groups, flattened hom and tensor
// complexes, and isomorphism classes of points.
#pragma once

#include <vector>

#include "cat2alg/exactlin.hpp"

namespace cat2alg {

enum class Ring { Z, Q };

inline const char* to_string(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

// d is the differential K^-1 -> K^0 on generators, so n1() generators in
// degree -1 and n0() in degree 0. Over Z each term is a finitely presented
// abelian group: generators modulo the row span of its relation matrix.
// Over Q the terms are vector spaces, the relation matrices must be empty,
// and d may have rational entries (over Z it must be integral).
struct Complex2 {
    Ring ring = Ring::Z;
    RatMatrix d;
    IntMatrix rel_m1;  // rows are relations among the degree -1 generators
    IntMatrix rel_0;   // rows are relations among the degree 0 generators

    std::size_t n1() const { return d.cols(); }
    std::size_t n0() const { return d.rows(); }
};

// Shape and well-definedness checks; throws Error(invalid_input) or
// Error(unsupported). Over Z this includes: d integral, and d maps every
// degree -1 relation into the degree 0 relation lattice.
void validate_complex(const Complex2& k);

// The integral differential of a Z complex.
IntMatrix int_differential(const Complex2& k);

struct ComplexHomotopy {
    Ring ring = Ring::Z;
    // Over Z these carry full invariant-factor data. Over Q only dimensions
    // are meaningful; they are reported as free ranks.
    FinAbGroup pi0;
    FinAbGroup pi1;
};

ComplexHomotopy ch_pi(const Complex2& k);

// Flattened hom complex over Q: degree -1 is Hom(K^0, K'^-1), degree 0 is
// the space of chain maps (f-1, f0) with f0 d = d' f-1, and the differential
// sends h to (h d, d' h). Z input is rejected as unsupported.
Complex2 hom_flat(const Complex2& k, const Complex2& kp);

// Flattened tensor complex over Q: degree -1 is
// (K^-1 (x) K'^0 (+) K^0 (x) K'^-1) modulo the image of
// u (x) v -> (-u (x) d'v, du (x) v), degree 0 is K^0 (x) K'^0, and the
// differential sends (x (x) y, u (x) w) to dx (x) y + u (x) d'w. The
// quotient is realized on a complement basis of that image. Z input is
// rejected as unsupported.
Complex2 tensor_flat(const Complex2& k, const Complex2& kp);

// Whether the points x, y of K^0 are isomorphic in the associated groupoid,
// i.e. y - x lies in im(d) plus the relation lattice.
bool pch_isomorphic(const Complex2& k, const IntVec& x, const IntVec& y);

// All points of K^0 grouped into isomorphism classes, as ambient coordinate
// vectors. Requires K^0 finite (Z with full-rank relations); otherwise
// throws Error(enumeration_infeasible).
std::vector<std::vector<IntVec>> pch_iso_classes(const Complex2& k);

} // namespace cat2alg
