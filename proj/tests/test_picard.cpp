#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cat2alg/picard.hpp>
#include <cat2alg/rng.hpp>

#include <numeric>
#include <set>
#include <vector>

#include "support/oracles.hpp"

using namespace cat2alg;

namespace {

Complex2 qcomplex(const RatMatrix& d) {
    Complex2 k;
    k.ring = Ring::Q;
    k.d = d;
    k.rel_m1 = IntMatrix(0, d.cols());
    k.rel_0 = IntMatrix(0, d.rows());
    return k;
}

Complex2 zcomplex(const IntMatrix& d, const IntMatrix& rel_m1, const IntMatrix& rel_0) {
    Complex2 k;
    k.ring = Ring::Z;
    k.d = to_rat(d);
    k.rel_m1 = rel_m1;
    k.rel_0 = rel_0;
    return k;
}

long to_long(const Int& x) { return static_cast<long>(x.get_si()); }

// Enumerate the tuple group (+) Z/m_i.
std::vector<std::vector<long>> enumerate_tuples(const std::vector<long>& mods) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(mods.size(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t p = 0;
        while (p < mods.size()) {
            if (++cur[p] < mods[p]) break;
            cur[p] = 0;
            ++p;
        }
        if (p == mods.size()) break;
        if (mods.empty()) break;
    }
    return out;
}

// Number of elements x of the group with factors f such that k * x = 0;
// this fingerprint determines a finite abelian group.
Int killed_count_from_factors(const FinAbGroup& g, long k) {
    Int n = 1;
    for (const Int& f : g.factors()) {
        REQUIRE(f != 0);
        n *= gcd(Int(k), f);
    }
    return n;
}

} // namespace

TEST_CASE("homotopy groups of basic complexes") {
    // 0 -> Z^2
    ComplexHomotopy a = ch_pi(zcomplex(IntMatrix(2, 0), IntMatrix(0, 0), IntMatrix(0, 2)));
    CHECK(a.pi0 == FinAbGroup({0, 0}));
    CHECK(a.pi1.is_trivial());

    // Z --2--> Z
    ComplexHomotopy b =
        ch_pi(zcomplex(IntMatrix::from_rows({{2}}), IntMatrix(0, 1), IntMatrix(0, 1)));
    CHECK(b.pi0 == FinAbGroup({2}));
    CHECK(b.pi1.is_trivial());

    // Z --0--> Z
    ComplexHomotopy c = ch_pi(zcomplex(IntMatrix(1, 1), IntMatrix(0, 1), IntMatrix(0, 1)));
    CHECK(c.pi0 == FinAbGroup({0}));
    CHECK(c.pi1 == FinAbGroup({0}));

    // Z/4 --1--> Z/2 (presented): pi0 = 0, pi1 = 2Z/4Z = Z/2
    ComplexHomotopy e = ch_pi(zcomplex(IntMatrix::from_rows({{1}}),
                                       IntMatrix::from_rows({{4}}),
                                       IntMatrix::from_rows({{2}})));
    CHECK(e.pi0.is_trivial());
    CHECK(e.pi1 == FinAbGroup({2}));
}

TEST_CASE("differential must respect relations") {
    // Z/2 --1--> Z has no well-defined differential.
    Complex2 bad = zcomplex(IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{2}}),
                            IntMatrix(0, 1));
    CHECK_THROWS_AS(validate_complex(bad), Error);

    Complex2 nonint = qcomplex(RatMatrix::from_rows({{1}}));
    nonint.ring = Ring::Z;
    nonint.d.at(0, 0) = Rat(1, 2);
    CHECK_THROWS_AS(validate_complex(nonint), Error);

    Complex2 qrel = qcomplex(RatMatrix::from_rows({{1}}));
    qrel.rel_0 = IntMatrix::from_rows({{2}});
    CHECK_THROWS_AS(validate_complex(qrel), Error);
}

TEST_CASE("homotopy groups of maps of finite groups vs brute enumeration") {
    SplitMix64 rng(919);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n1 = 1 + rng.below(2);
        std::size_t n0 = 1 + rng.below(2);
        std::vector<long> a(n1), b(n0);
        for (auto& x : a) x = 2 + rng.below(5);
        for (auto& x : b) x = 2 + rng.below(5);

        // A homomorphism (+) Z/a_i -> (+) Z/b_j needs entries divisible by
        // b_j / gcd(b_j, a_i).
        IntMatrix f(n0, n1);
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t i = 0; i < n1; ++i) {
                long step = b[j] / std::gcd(b[j], a[i]);
                f.at(j, i) = Int(step * rng.range(0, b[j] / step - 1));
            }

        IntMatrix rel1(n1, n1), rel0(n0, n0);
        for (std::size_t i = 0; i < n1; ++i) rel1.at(i, i) = a[i];
        for (std::size_t j = 0; j < n0; ++j) rel0.at(j, j) = b[j];
        ComplexHomotopy h = ch_pi(zcomplex(f, rel1, rel0));
        REQUIRE(h.pi0.is_finite());
        REQUIRE(h.pi1.is_finite());

        auto mod = [](long v, long m) { return ((v % m) + m) % m; };
        auto apply = [&](const std::vector<long>& x) {
            std::vector<long> y(n0, 0);
            for (std::size_t j = 0; j < n0; ++j) {
                long acc = 0;
                for (std::size_t i = 0; i < n1; ++i)
                    acc += to_long(f.at(j, i)) * x[i];
                y[j] = mod(acc, b[j]);
            }
            return y;
        };

        // Kernel fingerprint.
        std::vector<std::vector<long>> kernel;
        for (const auto& x : enumerate_tuples(a)) {
            bool in = true;
            for (long y : apply(x))
                if (y != 0) in = false;
            if (in) kernel.push_back(x);
        }
        for (long k = 1; k <= 40; ++k) {
            Int count = 0;
            for (const auto& x : kernel) {
                bool killed = true;
                for (std::size_t i = 0; i < n1; ++i)
                    if (mod(k * x[i], a[i]) != 0) killed = false;
                if (killed) ++count;
            }
            CHECK(count == killed_count_from_factors(h.pi1, k));
        }

        // Cokernel fingerprint: count cosets of im(f) killed by k.
        std::set<std::vector<long>> image;
        for (const auto& x : enumerate_tuples(a)) image.insert(apply(x));
        Int expected_order = 1;
        for (long v : b) expected_order *= v;
        for (long k = 1; k <= 40; ++k) {
            Int count = 0;
            for (const auto& y : enumerate_tuples(b)) {
                std::vector<long> ky(n0);
                for (std::size_t j = 0; j < n0; ++j) ky[j] = mod(k * y[j], b[j]);
                if (image.count(ky)) ++count;
            }
            // Each killed coset contains |im| elements y with k*y in im.
            CHECK(count == killed_count_from_factors(h.pi0, k) * Int((long)image.size()));
        }
        CHECK(h.pi0.order() * Int((long)image.size()) == expected_order);
    }
}

TEST_CASE("hom_flat dimensions match the split model") {
    SplitMix64 rng(271828);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n1 = rng.below(3), n0 = rng.below(3);
        std::size_t m1 = rng.below(3), m0 = rng.below(3);
        Complex2 k = qcomplex(to_rat(oracle::random_int_matrix(rng, n0, n1, 3)));
        Complex2 kp = qcomplex(to_rat(oracle::random_int_matrix(rng, m0, m1, 3)));
        std::size_t r = rank(k.d), rp = rank(kp.d);
        std::size_t h0 = n0 - r, h1 = n1 - r;
        std::size_t g0 = m0 - rp, g1 = m1 - rp;

        Complex2 hom = hom_flat(k, kp);
        validate_complex(hom);
        ComplexHomotopy h = ch_pi(hom);
        CHECK(h.pi0.free_rank() == h1 * g1 + h0 * g0);
        CHECK(h.pi1.free_rank() == h0 * g1);
    }
}

TEST_CASE("tensor_flat dimensions match the split model") {
    SplitMix64 rng(314159);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n1 = rng.below(3), n0 = rng.below(3);
        std::size_t m1 = rng.below(3), m0 = rng.below(3);
        Complex2 k = qcomplex(to_rat(oracle::random_int_matrix(rng, n0, n1, 3)));
        Complex2 kp = qcomplex(to_rat(oracle::random_int_matrix(rng, m0, m1, 3)));
        std::size_t r = rank(k.d), rp = rank(kp.d);
        std::size_t h0 = n0 - r, h1 = n1 - r;
        std::size_t g0 = m0 - rp, g1 = m1 - rp;

        Complex2 ten = tensor_flat(k, kp);
        validate_complex(ten);
        ComplexHomotopy h = ch_pi(ten);
        CHECK(h.pi0.free_rank() == h0 * g0);
        CHECK(h.pi1.free_rank() == h1 * g0 + h0 * g1);
    }
}

TEST_CASE("hom_flat and tensor_flat reject integral complexes") {
    Complex2 z = zcomplex(IntMatrix::from_rows({{2}}), IntMatrix(0, 1), IntMatrix(0, 1));
    Complex2 q = qcomplex(RatMatrix::from_rows({{1}}));
    CHECK_THROWS_AS((void)hom_flat(z, q), Error);
    CHECK_THROWS_AS((void)tensor_flat(q, z), Error);
    try {
        (void)hom_flat(z, q);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported);
    }
}

TEST_CASE("point isomorphism classes of a finite example") {
    // Z --2--> Z with K^0 = Z/8: two classes (pi0 = Z/2) of four points.
    Complex2 k = zcomplex(IntMatrix::from_rows({{2}}), IntMatrix(0, 1),
                          IntMatrix::from_rows({{8}}));
    auto classes = pch_iso_classes(k);
    REQUIRE(classes.size() == 2);
    std::size_t total = 0;
    for (const auto& cls : classes) {
        CHECK(cls.size() == 4);
        total += cls.size();
        for (const auto& p : cls)
            CHECK(pch_isomorphic(k, cls.front(), p));
    }
    CHECK(total == 8);
    CHECK_FALSE(pch_isomorphic(k, classes[0].front(), classes[1].front()));

    ComplexHomotopy h = ch_pi(k);
    CHECK(h.pi0 == FinAbGroup({2}));

    // Free K^0 is infinite: enumeration must refuse.
    Complex2 inf = zcomplex(IntMatrix::from_rows({{2}}), IntMatrix(0, 1), IntMatrix(0, 1));
    CHECK_THROWS_AS((void)pch_iso_classes(inf), Error);
    try {
        (void)pch_iso_classes(inf);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::enumeration_infeasible);
    }
    CHECK(pch_isomorphic(inf, {Int(0)}, {Int(4)}));
    CHECK_FALSE(pch_isomorphic(inf, {Int(0)}, {Int(3)}));
}

TEST_CASE("quasi-isomorphic replacement keeps hom and tensor homology") {
    SplitMix64 rng(11235);
    Complex2 k = qcomplex(to_rat(IntMatrix::from_rows({{1, 2}, {0, 0}})));
    Complex2 kp = qcomplex(to_rat(IntMatrix::from_rows({{3}})));

    // Add a contractible summand Q --id--> Q to k.
    RatMatrix d2(3, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) d2.at(i, j) = k.d.at(i, j);
    d2.at(2, 2) = 1;
    Complex2 kbig = qcomplex(d2);

    ComplexHomotopy a = ch_pi(hom_flat(k, kp));
    ComplexHomotopy b = ch_pi(hom_flat(kbig, kp));
    CHECK(a.pi0 == b.pi0);
    CHECK(a.pi1 == b.pi1);

    ComplexHomotopy c = ch_pi(tensor_flat(k, kp));
    ComplexHomotopy d = ch_pi(tensor_flat(kbig, kp));
    CHECK(c.pi0 == d.pi0);
    CHECK(c.pi1 == d.pi1);
    (void)rng;
}
