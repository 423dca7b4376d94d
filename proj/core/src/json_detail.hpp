// nlohmann-level converters between library types and their JSON forms,
// shared by json_io.cpp and cli.cpp. The public boundary in json_io.hpp
// speaks strings; nothing outside core/src sees these declarations.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cat2alg/error.hpp"
#include "cat2alg/exactlin.hpp"
#include "cat2alg/hochschild.hpp"
#include "cat2alg/linf2.hpp"
#include "cat2alg/picard.hpp"
#include "cat2alg/skewsym.hpp"
#include "cat2alg/twogroup.hpp"

namespace cat2alg::jsondetail {

using nlohmann::json;

// json::parse with the exception mapped onto Error(invalid_input).
json parse_text(const std::string& text);

// Member access on an object, failing with the field name when absent.
const json& require(const json& v, const char* field, const std::string& where);

// Exact numerics. Inputs accept plain JSON integers and decimal strings;
// floats are rejected. Rationals additionally accept "p/q" and are
// canonicalized on the way in.
Int int_from(const json& v, const std::string& where);
Rat rat_from(const json& v, const std::string& where);
std::size_t index_from(const json& v, const std::string& where);
long signed_from(const json& v, const std::string& where);

json num_json(const Int& x);
json num_json(const Rat& x);
json num_json(const RatVec& v);
json num_json(const RatMatrix& m);
json num_json(const IntMatrix& m);
json factors_json(const FinAbGroup& g);

RatVec rat_vec_from(const json& v, const std::string& where);
RatMatrix rat_matrix_from(const json& v, const std::string& where);
IntMatrix int_matrix_from(const json& v, const std::string& where);

// Sparse table keys "(i,j)->k": `inputs` indices in the parentheses plus
// the output coordinate after the arrow. Returns inputs+1 indices.
std::vector<std::size_t> key_indices(const std::string& key, std::size_t inputs,
                                     const std::string& where);
std::string make_key(const std::vector<std::size_t>& idx);

// Plain tuple keys "(g,h,k)" with no output coordinate, used by the
// associator and gamma tables whose values are group elements.
std::vector<std::size_t> tuple_key(const std::string& key, std::size_t count,
                                   const std::string& where);
std::string make_tuple_key(const std::vector<std::size_t>& idx);

// pi1 elements: an index, or a tuple over the invariant factors (entries
// reduced into range, so negatives are fine).
std::size_t pi1_elem_from(const AbelianElements& pi1, const json& v,
                          const std::string& where);
json pi1_elem_json(const AbelianElements& pi1, std::size_t idx);

Skeletal2Group group_from(const json& v, const std::string& where);
json group_json(const Skeletal2Group& g);

// Reads f0 / f1 / gamma from v; the endpoints supply the index ranges.
Hom2G hom_from(const json& v, const Skeletal2Group& src, const Skeletal2Group& dst);

Complex2 complex_from(const json& v, const std::string& where);
json complex_json(const Complex2& k);

L2Algebra l2_from(const json& v);
json l2_json(const L2Algebra& a);

PseudoL2Data pseudo_from(const json& v);
json pseudo_json(const PseudoL2Data& p);

FinDimAlgebra algebra_from(const json& v, const std::string& where);
json algebra_json(const FinDimAlgebra& a);

FDModule module_from(const json& v, const std::string& where);
json module_json(const FDModule& x);

ExtensionSeq extension_from(const json& v, const std::string& where);
json extension_json(const ExtensionSeq& e);

} // namespace cat2alg::jsondetail
