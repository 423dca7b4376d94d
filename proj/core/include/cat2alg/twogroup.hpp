// Skeletal 2-groups: a finite group pi0 given by its multiplication table,
// a finite abelian pi1 with a pi0 action, and the associator recorded as a
// normalized 3-cochain valued in pi1. Morphism-level computations run on
// formal tensor words through a small constraint-move interpreter whose
// labels live in pi1; coherence statements then become label identities.
#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cat2alg/exactlin.hpp"
#include "cat2alg/report.hpp"

namespace cat2alg {

// Element enumeration for a finite abelian group in invariant-factor form.
// Elements are tuples (x_0, ..., x_{k-1}) with 0 <= x_i < d_i, flattened in
// mixed radix with the first coordinate fastest.
class AbelianElements {
public:
    explicit AbelianElements(FinAbGroup group);

    const FinAbGroup& group() const { return group_; }
    std::size_t size() const { return size_; }

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t smul(long k, std::size_t a) const;

    std::vector<long> tuple(std::size_t index) const;
    std::size_t index(const std::vector<long>& tuple) const;

private:
    FinAbGroup group_;
    std::vector<long> mods_;
    std::size_t size_ = 1;
};

class Skeletal2Group {
public:
    // Shape validation only (sizes and index ranges; alpha normalized and
    // pi1 finite). Group axioms, action validity, and the pentagon are
    // checked separately so violations can be reported with witnesses.
    Skeletal2Group(std::vector<std::vector<std::size_t>> pi0_table, FinAbGroup pi1,
                   std::vector<std::vector<std::size_t>> action,
                   std::vector<std::size_t> alpha);

    std::size_t order() const { return table_.size(); }
    std::size_t pi1_size() const { return pi1_.size(); }
    const AbelianElements& pi1() const { return pi1_; }
    const std::vector<std::vector<std::size_t>>& pi0_table() const { return table_; }
    const std::vector<std::vector<std::size_t>>& action_table() const { return action_; }
    const std::vector<std::size_t>& alpha_table() const { return alpha_; }

    std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
    std::size_t inv(std::size_t g) const;
    std::size_t act(std::size_t g, std::size_t a) const { return action_[g][a]; }
    std::size_t alpha(std::size_t g, std::size_t h, std::size_t k) const {
        return alpha_[(g * order() + h) * order() + k];
    }

    std::size_t add(std::size_t a, std::size_t b) const { return pi1_.add(a, b); }
    std::size_t neg(std::size_t a) const { return pi1_.neg(a); }

private:
    std::vector<std::vector<std::size_t>> table_;
    AbelianElements pi1_;
    std::vector<std::vector<std::size_t>> action_;
    std::vector<std::size_t> alpha_;
};

// Group axioms for the pi0 table, each action map an automorphism and
// g -> action[g] a homomorphism, alpha normalized.
CheckReport check_structure(const Skeletal2Group& g);

// Quadruples where the associator fails the coherence condition; empty
// exactly when every pentagon commutes.
std::vector<std::array<std::size_t, 4>> pentagon_violations(const Skeletal2Group& g);
CheckReport check_pentagon(const Skeletal2Group& g);

// An endomorphism of the object obj, recorded by its pi1 label.
struct Mor {
    std::size_t obj = 0;
    std::size_t label = 0;
};

std::size_t tensor_obj(const Skeletal2Group& g, std::size_t a, std::size_t b);
Mor tensor_mor(const Skeletal2Group& g, const Mor& f, const Mor& fp);

// The chosen weak inverse of x together with the two structure maps into
// the unit: e on sigma(x) (x) (x) (fixed to 0) and i on x (x) sigma(x)
// (derived from the double-inverse comparison).
struct AdjointData {
    std::size_t sigma = 0;
    std::size_t e_label = 0;
    std::size_t i_label = 0;
};

AdjointData sigma(const Skeletal2Group& g, std::size_t x);

// ---- Formal tensor words and constraint moves ----

struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
    enum class Tag { unit, gen, tensor, sigma };
    Tag tag = Tag::unit;
    std::size_t gen = 0; // object index, for Tag::gen
    WordPtr a, b;        // tensor children; sigma child in a
};

WordPtr wunit();
WordPtr wgen(std::size_t g);
WordPtr wtensor(const WordPtr& a, const WordPtr& b);
WordPtr wsigma(const WordPtr& a);

bool word_equal(const WordPtr& a, const WordPtr& b);
std::size_t word_value(const Skeletal2Group& g, const WordPtr& w);
std::string to_string(const WordPtr& w);

// Primitive structural moves. Every move is an isomorphism between words of
// equal value; its label is reported in root context (transported through
// the enclosing tensor and sigma nodes).
enum class MoveKind {
    assoc,        // (A B) C -> A (B C), label +alpha
    assoc_inv,    // A (B C) -> (A B) C, label -alpha
    unit_intro_l, // A -> I A
    unit_intro_r, // A -> A I
    unit_elim_l,  // I A -> A
    unit_elim_r,  // A I -> A
    i_move,       // A Sigma(A) -> I, label +i of the value of A
    i_inv,        // I -> A Sigma(A), label -i (A given as the pattern)
    e_move,       // Sigma(A) A -> I, label 0
    e_inv,        // I -> Sigma(A) A, label 0 (A given as the pattern)
    gen_unit,     // Gen(identity) -> I, label 0 (same object in the model)
    gen_unit_inv, // I -> Gen(identity)
};

struct Move {
    MoveKind kind;
    std::vector<int> path;  // 0/1 child steps from the root
    WordPtr pattern;        // the word A for i_inv / e_inv / pattern checks
};

struct MoveApplication {
    WordPtr result;
    std::size_t label = 0; // pi1 contribution in root context
};

MoveApplication apply_move(const Skeletal2Group& g, const WordPtr& w, const Move& m);

// Derived composite moves, each executed as a program of primitive moves.
// apply_antihom: Sigma(A (x) B) -> Sigma(B) (x) Sigma(A).
// apply_double_sigma: A -> Sigma(Sigma(A)).
// apply_double_sigma_inv: Sigma(Sigma(A)) -> A.
// apply_sigma_unit: Sigma(I) -> I.
MoveApplication apply_antihom(const Skeletal2Group& g, const WordPtr& w,
                              const std::vector<int>& path);
MoveApplication apply_double_sigma(const Skeletal2Group& g, const WordPtr& w,
                                   const std::vector<int>& path);
MoveApplication apply_double_sigma_inv(const Skeletal2Group& g, const WordPtr& w,
                                       const std::vector<int>& path);
MoveApplication apply_sigma_unit(const Skeletal2Group& g, const WordPtr& w,
                                 const std::vector<int>& path);

// Rewrites the subtree at path so that every Sigma node sits directly on a
// generator, using the composite moves above.
MoveApplication sigma_normalize(const Skeletal2Group& g, const WordPtr& w,
                                const std::vector<int>& path);

// Reassociates the subtree at path into a right-nested comb and removes
// unit leaves (including formal generators of the identity object).
MoveApplication flatten(const Skeletal2Group& g, const WordPtr& w,
                        const std::vector<int>& path);

enum class ReduceStrategy { leftmost, rightmost };

struct Reduction {
    bool reduced_to_unit = false;
    std::size_t label = 0; // valid when reduced_to_unit
    WordPtr final_word;    // the unit, or the irreducible word reached
};

// Full constraint-move reduction: sigma-normalize, flatten, and cancel
// structurally adjacent inverse pairs until nothing applies.
Reduction reduce_to_unit(const Skeletal2Group& g, const WordPtr& w, ReduceStrategy strategy);

// ---- Commutator calculus ----

// x (x) (y (x) Sigma(x)): the conjugation word for y^x.
WordPtr conj_word(std::size_t x, std::size_t y);
// A (x) (B (x) (Sigma(A) (x) Sigma(B))): the commutator word.
WordPtr comm_word(const WordPtr& a, const WordPtr& b);
WordPtr comm_word(std::size_t x, std::size_t y);

struct CommResult {
    std::size_t obj = 0;                    // x y x^-1 y^-1 in pi0
    std::optional<std::size_t> label;       // present when the word reduces
};

CommResult comm(const Skeletal2Group& g, std::size_t x, std::size_t y);

struct TricommResult {
    WordPtr word;                 // ((x,y),z^y) ((y,z),x^z) ((z,x),y^x)
    std::size_t label = 0;        // canonical (leftmost) reduction label
    std::size_t label_alt = 0;    // rightmost reduction label
    bool path_independent = false;
};

TricommResult tricomm(const Skeletal2Group& g, std::size_t x, std::size_t y, std::size_t z);

// Adjunction zig-zags for every object; both composites must be identities.
CheckReport check_adjunction_zigzags(const Skeletal2Group& g);

// The canonical map s: (x,y) -> sigma((y,x)) for every pair, and the square
// identity sigma(s_{y,x}) . s_{x,y} = double-inverse comparison.
CheckReport check_cor_for_i(const Skeletal2Group& g);

// The induced self-isomorphism of the first tricomm factor must be the
// identity for every triple.
CheckReport check_tri_identity(const Skeletal2Group& g);

// ---- Homomorphisms and kernels ----

struct Hom2G {
    std::vector<std::size_t> f0; // map of pi0 indices
    IntMatrix f1;                // matrix on pi1 tuple coordinates
    std::vector<std::size_t> gamma; // gamma[g * n + h] = pi1' element index
};

// f0 a homomorphism, f1 well defined and action-equivariant, gamma
// normalized with d(gamma) matching the associator discrepancy.
CheckReport check_hom(const Skeletal2Group& src, const Skeletal2Group& dst, const Hom2G& f);

struct Kernel2G {
    FinAbGroup pi1; // kernel of f1

    // pi0 of the kernel: pairs (x, c) of x in ker f0 and a coset c of
    // im f1 in pi1', with (x,a)(x',a') = (x x', a + a' + [gamma(x,x')]).
    std::vector<std::pair<std::size_t, std::size_t>> pi0_elements;
    std::vector<std::vector<std::size_t>> pi0_table;
    bool pi0_abelian = false;
    std::optional<FinAbGroup> pi0_invariants; // present when abelian
};

Kernel2G kernel(const Skeletal2Group& src, const Skeletal2Group& dst, const Hom2G& f);

// Invariant factors of a finite abelian group presented by its
// multiplication table (identity at index 0).
FinAbGroup abelian_table_invariants(const std::vector<std::vector<std::size_t>>& table);

} // namespace cat2alg
