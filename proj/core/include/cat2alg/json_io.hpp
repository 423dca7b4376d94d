// JSON readers and writers for the file formats the command line accepts.
// Exact numerics travel as decimal strings ("p/q" for rationals, the "/1"
// omitted); plain JSON integers are also accepted on input. Floating point
// literals are rejected: there is no exact way back from them. Sparse
// bracket tables use "(i,j)->k" keys whose last index selects the output
// coordinate.
#pragma once

#include <string>

#include "cat2alg/hochschild.hpp"
#include "cat2alg/linf2.hpp"
#include "cat2alg/picard.hpp"
#include "cat2alg/skewsym.hpp"
#include "cat2alg/twogroup.hpp"

namespace cat2alg {

// All parsers throw Error(invalid_input) on malformed text, with the
// offending field named; they check shapes only, so the structural
// validators still apply to whatever comes out.

Skeletal2Group parse_2group(const std::string& text);
std::string serialize_2group(const Skeletal2Group& g);

// One file holding a homomorphism together with both endpoints, under the
// fields "source", "target", "f0", "f1", "gamma".
struct TwoGroupHomFile {
    Skeletal2Group source;
    Skeletal2Group target;
    Hom2G hom;
};

TwoGroupHomFile parse_2group_hom(const std::string& text);

Complex2 parse_complex(const std::string& text);
std::string serialize_complex(const Complex2& k);

L2Algebra parse_l2(const std::string& text);
std::string serialize_l2(const L2Algebra& a);

PseudoL2Data parse_pseudo(const std::string& text);
std::string serialize_pseudo(const PseudoL2Data& p);

FinDimAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const FinDimAlgebra& a);

FDModule parse_fdmodule(const std::string& text);
std::string serialize_fdmodule(const FDModule& x);

} // namespace cat2alg
