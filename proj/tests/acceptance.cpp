// Acceptance suite: eight end-to-end properties checked against
// independently coded ground truth (direct cocycle evaluation, gcd-of-minors
// invariant factors, a generic four-argument homotopy-Jacobi expansion, and
// hand-derived cohomology of a fixed algebra corpus). Each criterion prints
// one PASS/FAIL line; intermediate failures name their file and line.
#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <cat2alg/exactlin.hpp>
#include <cat2alg/hochschild.hpp>
#include <cat2alg/linf2.hpp>
#include <cat2alg/picard.hpp>
#include <cat2alg/report.hpp>
#include <cat2alg/rng.hpp>
#include <cat2alg/skewsym.hpp>
#include <cat2alg/twogroup.hpp>

#include "support/hochschild_gen.hpp"
#include "support/linf2_gen.hpp"
#include "support/linf2_oracle.hpp"
#include "support/oracles.hpp"
#include "support/twogroup_gen.hpp"

using namespace cat2alg;

// Always-on check; doctest is deliberately not used here so the suite
// behaves the same in Release builds.
#define REQUIRE(cond)                                                  \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::printf("[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return false;                                              \
        }                                                              \
    } while (0)

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool item_passed(const CheckReport& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return it.passed;
    return false;
}

// Direct evaluation of the cocycle condition
//   g.alpha(h,k,l) - alpha(gh,k,l) + alpha(g,hk,l) - alpha(g,h,kl)
//     + alpha(g,h,k) = 0,
// written against the raw tables rather than the library's pentagon walk.
bool cocycle_condition_holds(const gen::Table& table,
                             const std::vector<std::vector<std::size_t>>& action,
                             const AbelianElements& pi1,
                             const std::vector<std::size_t>& alpha) {
    std::size_t n = table.size();
    auto al = [&](std::size_t g, std::size_t h, std::size_t k) {
        return alpha[(g * n + h) * n + k];
    };
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    std::size_t v = action[g][al(h, k, l)];
                    v = pi1.add(v, pi1.neg(al(table[g][h], k, l)));
                    v = pi1.add(v, al(g, table[h][k], l));
                    v = pi1.add(v, pi1.neg(al(g, h, table[k][l])));
                    v = pi1.add(v, al(g, h, k));
                    if (v != 0) return false;
                }
    return true;
}

// Criterion 1. For pi0 and pi1 cyclic of order 2 or 3 with trivial action,
// the pentagon verdict must agree with the cocycle condition on every
// normalized 3-cochain. The verified groups are kept for criterion 2.
bool criterion1(std::vector<Skeletal2Group>& valid_out) {
    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
        for (long k : {2L, 3L}) {
            gen::Table table = gen::cyclic_table(n);
            FinAbGroup pi1({Int(k)});
            AbelianElements el(pi1);
            auto action = gen::trivial_action(n, std::size_t(k));

            // Free positions of a normalized cochain: all triples avoiding
            // the identity.
            std::vector<std::array<std::size_t, 3>> pos;
            for (std::size_t g = 1; g < n; ++g)
                for (std::size_t h = 1; h < n; ++h)
                    for (std::size_t kk = 1; kk < n; ++kk) pos.push_back({g, h, kk});

            std::size_t expected = 1;
            for (std::size_t i = 0; i < pos.size(); ++i) expected *= std::size_t(k);

            std::vector<std::size_t> digits(pos.size(), 0);
            std::size_t seen = 0;
            while (true) {
                std::vector<std::size_t> alpha(n * n * n, 0);
                for (std::size_t i = 0; i < pos.size(); ++i)
                    alpha[(pos[i][0] * n + pos[i][1]) * n + pos[i][2]] = digits[i];

                Skeletal2Group g2(table, pi1, action, alpha);
                bool lib = check_pentagon(g2).all_passed();
                bool direct = cocycle_condition_holds(table, action, el, alpha);
                REQUIRE(lib == direct);
                if (lib) valid_out.push_back(g2);
                ++seen;

                std::size_t p = 0;
                while (p < digits.size()) {
                    if (++digits[p] < std::size_t(k)) break;
                    digits[p] = 0;
                    ++p;
                }
                if (p == digits.size()) break;
            }
            REQUIRE(seen == expected);
        }
    }
    REQUIRE(valid_out.size() >= 4);
    REQUIRE(seconds_since(t0) < 5.0);
    return true;
}

// Criterion 2. Adjunction zig-zags, the square relating i_x to inverses,
// path independence of the canonical commutator label, and the vanishing
// self-isomorphism, on every group verified in criterion 1 plus ten
// randomized examples whose pi0 acts nontrivially.
bool criterion2(const std::vector<Skeletal2Group>& from_c1) {
    REQUIRE(!from_c1.empty());
    std::vector<Skeletal2Group> all = from_c1;
    for (std::size_t i = 0; i < 10; ++i)
        all.push_back(gen::make_catalog_group(i, 1000 + i));

    for (const Skeletal2Group& g : all) {
        REQUIRE(g.order() <= 6);
        REQUIRE(check_structure(g).all_passed());
        REQUIRE(check_pentagon(g).all_passed());
        REQUIRE(check_adjunction_zigzags(g).all_passed());
        REQUIRE(check_cor_for_i(g).all_passed());
        REQUIRE(check_tri_identity(g).all_passed());
        for (std::size_t x = 0; x < g.order(); ++x)
            for (std::size_t y = 0; y < g.order(); ++y)
                for (std::size_t z = 0; z < g.order(); ++z)
                    REQUIRE(tricomm(g, x, y, z).path_independent);
    }
    return true;
}

// Valid 2-term algebras with dim V^-1 <= 3 and dim V^0 <= 4.
L2Algebra small_valid_algebra(SplitMix64& rng) {
    L2Algebra base;
    switch (rng.below(3)) {
    case 0:
        base = gen::abelian(gen::random_matrix(rng, 1 + rng.below(4), 1 + rng.below(3)));
        break;
    case 1: base = gen::gl2_on_q2(); break;
    default: base = gen::sl2_string(); break;
    }
    return gen::conjugate(base, gen::random_invertible(rng, base.n0),
                          gen::random_invertible(rng, base.n1));
}

// Criterion 3. Perturbing a valid algebra by a random symmetric defect and
// skew-symmetrizing must reproduce it tensor for tensor, with every
// intermediate and final structure passing its identity checks; the coded
// four-argument coherence check must agree with the independently written
// expansion of the same axiom.
bool criterion3() {
    auto t0 = std::chrono::steady_clock::now();

    SplitMix64 rng(42);
    for (std::size_t cases = 0; cases < 100; ++cases) {
        L2Algebra a = small_valid_algebra(rng);
        REQUIRE(a.n1 <= 3);
        REQUIRE(a.n0 <= 4);
        REQUIRE(check_identities(a).all_passed());

        std::vector<RatVec> q(a.n0 * a.n0, RatVec(a.n1));
        for (std::size_t i = 0; i < a.n0; ++i)
            for (std::size_t j = i; j < a.n0; ++j) {
                RatVec v(a.n1);
                for (std::size_t h = 0; h < a.n1; ++h) v[h] = Rat(rng.range(-2, 2));
                q[i * a.n0 + j] = v;
                q[j * a.n0 + i] = v;
            }

        PseudoL2Data p = perturb(a, q);
        REQUIRE(check_pseudo(p).all_passed());

        L2Algebra back = skew_symmetrize(p);
        REQUIRE(back.l1 == a.l1);
        REQUIRE(back.l2_00 == a.l2_00);
        REQUIRE(back.l2_0m == a.l2_0m);
        REQUIRE(back.l3 == a.l3);
        REQUIRE(check_identities(back).all_passed());
    }

    SplitMix64 rng2(7);
    for (std::size_t i = 0; i < 20; ++i) {
        L2Algebra a = gen::random_valid(rng2);
        CheckReport r = check_identities(a);
        bool coded = item_passed(r, "l3_coherence");
        REQUIRE(coded == oracle::ls4_holds(a));
        REQUIRE(coded);
    }

    REQUIRE(seconds_since(t0) < 30.0);
    return true;
}

// Criterion 4. Two independent routes to first Hochschild cohomology and
// the cohomology of the derived endomorphism algebra, against hand-derived
// values for six fixed algebras.
bool criterion4() {
    for (const halg::NamedAlgebra& named : halg::corpus()) {
        const FinDimAlgebra& a = named.alg;
        REQUIRE(std::size_t(center(a).cols()) == named.center_dim);
        REQUIRE(hh1(a).dim() == named.hh1_dim);
        REQUIRE(ext1_bimodule(a).dim() == named.hh1_dim);

        Cohomology2 coh = cohomology(gl_of_modcat(a));
        REQUIRE(coh.hm1_dim() == named.center_dim);
        REQUIRE(coh.h0_dim() == named.hh1_dim);
    }
    return true;
}

RatVec vectorize(const RatMatrix& m) {
    RatVec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& m) {
    if (basis.empty()) return m.is_zero();
    std::size_t n = basis[0].rows() * basis[0].cols();
    RatMatrix b(n, basis.size());
    RatMatrix bv(n, basis.size() + 1);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        RatVec col = vectorize(basis[c]);
        for (std::size_t r = 0; r < n; ++r) {
            b.at(r, c) = col[r];
            bv.at(r, c) = col[r];
        }
    }
    RatVec col = vectorize(m);
    for (std::size_t r = 0; r < n; ++r) bv.at(r, basis.size()) = col[r];
    return column_basis(b).cols() == column_basis(bv).cols();
}

// Criterion 5. Over the two truncated polynomial algebras: the class map on
// derivations is additive, its kernel is exactly the inner derivations
// (membership checked both by class coordinates and by searching for an
// explicit splitting), and Baer addition of extensions adds class
// coordinates.
bool criterion5() {
    for (std::size_t k : {std::size_t(2), std::size_t(3)}) {
        FinDimAlgebra a = halg::truncated_poly(k);
        std::vector<RatMatrix> ders = derivations(a);
        std::vector<RatMatrix> inners = inner_derivations(a);
        Ext1Context ctx = ext1_bimodule(a);
        REQUIRE(!ders.empty());

        for (const RatMatrix& d1 : ders)
            for (const RatMatrix& d2 : ders) {
                RatVec c1 = pi_map(a, d1).class_coords;
                RatVec c2 = pi_map(a, d2).class_coords;
                RatVec c12 = pi_map(a, d1 + d2).class_coords;
                REQUIRE(c12 == c1 + c2);
            }

        // Kernel: sample the derivation space at zero, the basis elements,
        // and their sums and differences, and at every inner derivation.
        std::vector<RatMatrix> samples;
        samples.push_back(RatMatrix(a.dim, a.dim));
        for (const RatMatrix& d : ders) samples.push_back(d);
        for (const RatMatrix& d : inners) samples.push_back(d);
        for (std::size_t i = 0; i < ders.size(); ++i)
            for (std::size_t j = i + 1; j < ders.size(); ++j) {
                samples.push_back(ders[i] + ders[j]);
                samples.push_back(ders[i] - ders[j]);
            }

        for (const RatMatrix& d : samples) {
            PiResult r = pi_map(a, d);
            bool zero_class = is_zero(r.class_coords);
            bool inner = in_span(inners, d);
            auto split = find_splitting(a, r.ext);
            REQUIRE(zero_class == inner);
            REQUIRE(split.has_value() == zero_class);
        }

        for (const RatMatrix& d1 : ders)
            for (const RatMatrix& d2 : ders) {
                ExtensionSeq e1 = pi_map(a, d1).ext;
                ExtensionSeq e2 = pi_map(a, d2).ext;
                RatVec sum_class = extension_class(a, ctx, baer_sum(a, e1, e2));
                RatVec expected = extension_class(a, ctx, e1) + extension_class(a, ctx, e2);
                REQUIRE(sum_class == expected);
            }
    }
    return true;
}

// Criterion 6. The epsilon1-epsilon2 coefficient of the dual-number
// commutator of two derivations is their matrix commutator, recomputed
// here with plain matrix products; lower coefficients are the identity and
// zero.
bool criterion6() {
    for (const halg::NamedAlgebra& named : halg::corpus()) {
        const FinDimAlgebra& a = named.alg;
        std::vector<RatMatrix> ders = derivations(a);
        for (const RatMatrix& d1 : ders)
            for (const RatMatrix& d2 : ders) {
                Trunc22Matrix t = dual_number_commutator(a, d1, d2);
                REQUIRE(t.m0 == RatMatrix::identity(a.dim));
                REQUIRE(t.m1.is_zero());
                REQUIRE(t.m2.is_zero());
                REQUIRE(t.m12 == d1 * d2 - d2 * d1);
            }
    }
    return true;
}

// Criterion 7. Unit and both counit components of the fiber-product
// adjunction are bijections on twenty sampled modules of dimension at most
// four over the rationals and the dual numbers.
bool criterion7() {
    SplitMix64 rng(2026);
    std::size_t total = 0;
    for (std::size_t k : {std::size_t(1), std::size_t(2)}) {
        FinDimAlgebra a = halg::truncated_poly(k);
        std::vector<FDModule> samples;
        while (samples.size() < 10) {
            FDModule m = sample_dual_module(a, rng, 4 / a.dim);
            REQUIRE(m.dim <= 4);
            samples.push_back(m);
        }
        total += samples.size();
        REQUIRE(goodness_square_check(a, samples).all_passed());
    }
    REQUIRE(total == 20);
    return true;
}

Complex2 z_complex(const IntMatrix& d) {
    Complex2 k;
    k.ring = Ring::Z;
    k.d = to_rat(d);
    k.rel_m1 = IntMatrix(0, d.cols());
    k.rel_0 = IntMatrix(0, d.rows());
    return k;
}

Complex2 q_complex(const RatMatrix& d) {
    Complex2 k;
    k.ring = Ring::Q;
    k.d = d;
    k.rel_m1 = IntMatrix(0, d.cols());
    k.rel_0 = IntMatrix(0, d.rows());
    return k;
}

// Direct sum with an acyclic identity complex followed by invertible base
// changes in both degrees: quasi-isomorphic to the input by construction.
Complex2 quasi_iso_replacement(const Complex2& k, SplitMix64& rng) {
    std::size_t m = 1 + rng.below(2);
    std::size_t n0 = k.n0() + m;
    std::size_t n1 = k.n1() + m;
    RatMatrix block(n0, n1);
    for (std::size_t i = 0; i < k.n0(); ++i)
        for (std::size_t j = 0; j < k.n1(); ++j) block.at(i, j) = k.d.at(i, j);
    for (std::size_t i = 0; i < m; ++i) block.at(k.n0() + i, k.n1() + i) = 1;
    return q_complex(gen::random_invertible(rng, n0) * block *
                     gen::random_invertible(rng, n1));
}

std::array<std::size_t, 2> homology_ranks(const Complex2& k) {
    ComplexHomotopy h = ch_pi(k);
    return {h.pi1.free_rank(), h.pi0.free_rank()};
}

// Criterion 8. Homotopy groups of random integer complexes against the
// gcd-of-minors invariant-factor oracle, and invariance of hom and tensor
// homology under random quasi-isomorphic replacements over the rationals.
bool criterion8() {
    SplitMix64 rng(11);
    for (std::size_t inst = 0; inst < 25; ++inst) {
        std::size_t rows = 1 + rng.below(5);
        std::size_t cols = 1 + rng.below(5);
        IntMatrix d = oracle::random_int_matrix(rng, rows, cols, 10);

        ComplexHomotopy h = ch_pi(z_complex(d));
        std::vector<Int> inv = oracle::invariant_factors_by_minors(d);
        std::size_t rank = inv.size();
        REQUIRE(h.pi0 == FinAbGroup::from_diagonal(inv, rows - rank));
        REQUIRE(h.pi1 == FinAbGroup::from_diagonal({}, cols - rank));

        Complex2 kq = q_complex(to_rat(d));
        Complex2 kp = q_complex(gen::random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4)));
        auto hom_base = homology_ranks(hom_flat(kq, kp));
        auto ten_base = homology_ranks(tensor_flat(kq, kp));

        for (std::size_t rep = 0; rep < 10; ++rep) {
            Complex2 first = kq;
            Complex2 second = kp;
            if (rep % 2 == 0)
                first = quasi_iso_replacement(kq, rng);
            else
                second = quasi_iso_replacement(kp, rng);
            REQUIRE(homology_ranks(hom_flat(first, second)) == hom_base);
            REQUIRE(homology_ranks(tensor_flat(first, second)) == ten_base);
        }
    }
    return true;
}

} // namespace

int main() {
    std::vector<Skeletal2Group> valid_groups;

    struct Criterion {
        const char* label;
        bool ok;
    };
    std::vector<Criterion> results;
    results.push_back({"pentagon agrees with direct cocycle evaluation",
                       criterion1(valid_groups)});
    results.push_back({"coherence suite on verified and randomized 2-groups",
                       criterion2(valid_groups)});
    results.push_back({"skew-symmetrization roundtrip and coherence cross-check",
                       criterion3()});
    results.push_back({"hochschild cohomology cross-checks on the corpus",
                       criterion4()});
    results.push_back({"extension class additivity, kernel, and Baer sums",
                       criterion5()});
    results.push_back({"dual-number commutator coefficient", criterion6()});
    results.push_back({"adjunction goodness on sampled modules", criterion7()});
    results.push_back({"homotopy dictionary against the minors oracle",
                       criterion8()});

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::printf("[%zu/%zu] %s  %s\n", i + 1, results.size(),
                    results[i].ok ? "PASS" : "FAIL", results[i].label);
        if (!results[i].ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
