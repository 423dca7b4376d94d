#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cat2alg/error.hpp>
#include <cat2alg/rng.hpp>
#include <cat2alg/skewsym.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "support/linf2_gen.hpp"

using namespace cat2alg;

namespace {

bool item_passed(const CheckReport& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return it.passed;
    FAIL("missing check item " << name);
    return false;
}

std::string item_witness(const CheckReport& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return it.witness;
    return "";
}

std::vector<RatVec> random_symmetric_q(SplitMix64& rng, std::size_t n1, std::size_t n0) {
    std::vector<RatVec> q(n0 * n0, RatVec(n1));
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = i; j < n0; ++j) {
            RatVec v(n1);
            // two-argument mpq construction skips canonicalization, so
            // make halves by dividing instead
            for (auto& c : v) c = Rat(rng.range(-6, 6)) / 2;
            q[i * n0 + j] = v;
            q[j * n0 + i] = v;
        }
    return q;
}

bool same_algebra(const L2Algebra& a, const L2Algebra& b) {
    return a.n1 == b.n1 && a.n0 == b.n0 && a.l1 == b.l1 && a.l2_00 == b.l2_00 &&
           a.l2_0m == b.l2_0m && a.l3 == b.l3;
}

} // namespace

TEST_CASE("zero perturbation is a fixed point") {
    L2Algebra l = gen::sl2_string();
    std::vector<RatVec> zero_q(l.n0 * l.n0, RatVec(l.n1));
    PseudoL2Data p = perturb(l, zero_q);

    CHECK(p.lt2_00 == l.l2_00);
    CHECK(p.lt2_0m == l.l2_0m);
    for (std::size_t h = 0; h < l.n1; ++h)
        for (std::size_t i = 0; i < l.n0; ++i)
            CHECK(p.lt2_m0_at(h, i) == -l.l2_0m_at(i, h));
    for (const auto& v : p.s) CHECK(is_zero(v));
    CHECK(p.lt3 == l.l3);

    CheckReport r = check_pseudo(p);
    CHECK(r.all_passed());
    CHECK(r.items.size() == 6);
    CHECK(item_passed(r, "s_symmetric"));
    CHECK(item_passed(r, "antisymmetry_defect"));
    CHECK(item_passed(r, "jacobi_defect"));
    CHECK(item_passed(r, "cyclic_invariance"));
    CHECK(item_passed(r, "l3_symmetric_part"));
    CHECK(item_passed(r, "jacobiator_via_skew_output"));

    CHECK(same_algebra(skew_symmetrize(p), l));
}

TEST_CASE("roundtrip recovers every tensor") {
    SplitMix64 rng(411);
    for (int trial = 0; trial < 25; ++trial) {
        L2Algebra l = gen::random_valid(rng);
        std::vector<RatVec> q = random_symmetric_q(rng, l.n1, l.n0);
        PseudoL2Data p = perturb(l, q);

        CheckReport r = check_pseudo(p);
        CHECK(r.all_passed());
        L2Algebra back = skew_symmetrize(p);
        CHECK(same_algebra(back, l));
        CHECK(check_identities(back).all_passed());
    }
}

TEST_CASE("skeletal example passes through a nonzero defect") {
    SplitMix64 rng(77);
    L2Algebra l = gen::sl2_string();
    std::vector<RatVec> q = random_symmetric_q(rng, l.n1, l.n0);
    PseudoL2Data p = perturb(l, q);

    bool nonzero = false;
    for (const auto& v : p.s) nonzero = nonzero || !is_zero(v);
    CHECK(nonzero);
    // the differential vanishes, so the degree 0 bracket is untouched even
    // though s is not
    CHECK(p.lt2_00 == l.l2_00);
    CHECK_FALSE(p.lt3 == l.l3);
    CHECK(same_algebra(skew_symmetrize(p), l));
}

TEST_CASE("defect violations are localized with witnesses") {
    // symmetric part of the bracket no longer matches d s
    L2Algebra l = gen::abelian(RatMatrix::from_rows({{1}, {0}}));
    std::vector<RatVec> zero_q(l.n0 * l.n0, RatVec(l.n1));
    PseudoL2Data p = perturb(l, zero_q);
    p.s[0] = RatVec{Rat(1)};
    CheckReport r = check_pseudo(p);
    CHECK(item_passed(r, "s_symmetric"));
    CHECK_FALSE(item_passed(r, "antisymmetry_defect"));
    CHECK(item_witness(r, "antisymmetry_defect") == "(0,0)");
    CHECK_FALSE(item_passed(r, "jacobiator_via_skew_output"));
    CHECK(item_witness(r, "jacobiator_via_skew_output") ==
          "not certified: a defect identity fails");

    // asymmetric s
    p = perturb(l, zero_q);
    p.s[0 * 2 + 1] = RatVec{Rat(1)};
    r = check_pseudo(p);
    CHECK_FALSE(item_passed(r, "s_symmetric"));
    CHECK(item_witness(r, "s_symmetric") == "(0,1)");

    // cyclic invariance of lt3
    L2Algebra sl2 = gen::sl2_string();
    std::vector<RatVec> zq(sl2.n0 * sl2.n0, RatVec(sl2.n1));
    p = perturb(sl2, zq);
    p.lt3[(0 * 3 + 1) * 3 + 1][0] += 1;
    r = check_pseudo(p);
    CHECK_FALSE(item_passed(r, "cyclic_invariance"));

    // symmetric part of lt3: a constant table is cyclic but not alternating
    p = perturb(sl2, zq);
    for (auto& v : p.lt3) v[0] += 1;
    r = check_pseudo(p);
    CHECK(item_passed(r, "cyclic_invariance"));
    CHECK(item_passed(r, "jacobi_defect")); // d = 0 absorbs the shift
    CHECK_FALSE(item_passed(r, "l3_symmetric_part"));
}

TEST_CASE("jacobiator is certified through the converted output") {
    // gl_2 has zero differential, so an alternating shift of lt3 keeps all
    // four defect identities intact while ruining the coherence identity of
    // the output.
    SplitMix64 rng(909);
    L2Algebra l = gen::gl2_on_q2();
    std::vector<RatVec> q = random_symmetric_q(rng, l.n1, l.n0);
    PseudoL2Data p = perturb(l, q);

    const std::size_t n = l.n0;
    const std::size_t tri[6][4] = {{0, 1, 2, 0}, {1, 2, 0, 0}, {2, 0, 1, 0},
                                   {1, 0, 2, 1}, {0, 2, 1, 1}, {2, 1, 0, 1}};
    for (const auto& t : tri) {
        Rat sign(t[3] == 0 ? 1 : -1);
        RatVec& slot = p.lt3[(t[0] * n + t[1]) * n + t[2]];
        slot[0] += sign;
        slot[1] += Rat(2) * sign;
    }

    CheckReport r = check_pseudo(p);
    CHECK(item_passed(r, "s_symmetric"));
    CHECK(item_passed(r, "antisymmetry_defect"));
    CHECK(item_passed(r, "jacobi_defect"));
    CHECK(item_passed(r, "cyclic_invariance"));
    CHECK(item_passed(r, "l3_symmetric_part"));
    CHECK_FALSE(item_passed(r, "jacobiator_via_skew_output"));
    CHECK(item_witness(r, "jacobiator_via_skew_output").find("l3_coherence") !=
          std::string::npos);

    // conversion itself goes through; only the output checker objects
    L2Algebra out = skew_symmetrize(p);
    CheckReport outr = check_identities(out);
    CHECK_FALSE(item_passed(outr, "l3_coherence"));
}

TEST_CASE("conversion rejects defective data") {
    L2Algebra l = gen::abelian(RatMatrix::from_rows({{1}, {0}}));
    std::vector<RatVec> zero_q(l.n0 * l.n0, RatVec(l.n1));
    PseudoL2Data p = perturb(l, zero_q);
    p.s[0] = RatVec{Rat(1)};
    try {
        (void)skew_symmetrize(p);
        FAIL("defective data accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::identity_violation);
        CHECK(std::string(e.what()).find("antisymmetry_defect") != std::string::npos);
    }
}

TEST_CASE("shape and input validation") {
    PseudoL2Data p = PseudoL2Data::zero(1, 2);
    CHECK(check_pseudo(p).all_passed());

    p.lt2_m0.pop_back();
    try {
        (void)check_pseudo(p);
        FAIL("bad shape accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::dimension_mismatch);
    }
    CHECK_THROWS_AS((void)skew_symmetrize(p), Error);

    L2Algebra l = gen::sl2_string();
    std::vector<RatVec> q(l.n0 * l.n0, RatVec(l.n1));
    q[0 * 3 + 1][0] = 1; // asymmetric
    try {
        (void)perturb(l, q);
        FAIL("asymmetric perturbation accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_input);
    }

    q.pop_back();
    CHECK_THROWS_AS((void)perturb(l, q), Error);
}
