// Batch front end. Every subcommand reads one JSON file, dispatches into
// the library, and prints a single report object: command, input digest,
// check verdicts with witnesses, and the computed values. Reports are
// byte-identical across runs for identical inputs; randomized suites draw
// from a seeded splitmix64 stream only.
#include "cat2alg/cli.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cat2alg/error.hpp"
#include "cat2alg/exactlin.hpp"
#include "cat2alg/hochschild.hpp"
#include "cat2alg/linf2.hpp"
#include "cat2alg/picard.hpp"
#include "cat2alg/report.hpp"
#include "cat2alg/rng.hpp"
#include "cat2alg/skewsym.hpp"
#include "cat2alg/twogroup.hpp"
#include "json_detail.hpp"

namespace cat2alg {

namespace {

namespace jd = jsondetail;
using jd::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::size_t max_dim_from_env() {
    const char* s = std::getenv("CAT2ALG_MAX_DIM");
    if (s == nullptr || *s == '\0') return 64;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') return 64;
    return static_cast<std::size_t>(v);
}

struct Options {
    std::string input_path;
    std::string text; // raw input bytes
    bool pretty = false;
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    std::size_t max_dim = 64;
};

struct Outcome {
    CheckReport checks;
    json values = json::object();
};

void cap_dim(std::size_t dim, const std::string& what, const Options& opt) {
    if (dim > opt.max_dim)
        fail(ErrorKind::unsupported,
             what + " has size " + std::to_string(dim) + ", above the CAT2ALG_MAX_DIM cap of " +
                 std::to_string(opt.max_dim));
}

// First-failure aggregation for per-case suites, so a hundred cases yield
// one check item with a pointed witness instead of a hundred lines.
struct Aggregate {
    bool ok = true;
    std::string witness;

    void note(bool pass, const std::string& w) {
        if (!pass && ok) {
            ok = false;
            witness = w;
        }
    }
    void into(CheckReport& r, const std::string& name) const {
        r.add(name, ok, ok ? std::string() : witness);
    }
};

std::string first_failure(const CheckReport& r) {
    for (const CheckItem& it : r.items)
        if (!it.passed) return it.witness.empty() ? it.name : it.name + ": " + it.witness;
    return {};
}

void merge_prefixed(CheckReport& into, const CheckReport& from, const std::string& prefix) {
    for (const CheckItem& it : from.items) into.add(prefix + it.name, it.passed, it.witness);
}

RatVec basis_vec(std::size_t n, std::size_t i) {
    RatVec v(n);
    v[i] = 1;
    return v;
}

RatVec col_of(const RatMatrix& m, std::size_t j) {
    RatVec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

bool leibniz_holds(const FinDimAlgebra& a, const RatMatrix& d, std::string& witness) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            RatVec lhs = d * a.mult_at(i, j);
            RatVec rhs = a.mul(col_of(d, i), basis_vec(a.dim, j)) +
                         a.mul(basis_vec(a.dim, i), col_of(d, j));
            if (lhs != rhs) {
                witness = "fails at basis pair (" + std::to_string(i) + "," +
                          std::to_string(j) + ")";
                return false;
            }
        }
    return true;
}

// baer, goodness, and dual-comm wrap the algebra under an "algebra" field
// so the file can carry extensions or derivations next to it; a bare
// algebra file is accepted too and selects the sampling mode.
const json& algebra_slot(const json& root, const char* where) {
    if (root.is_object() && root.contains("algebra")) return root["algebra"];
    if (root.is_object() && root.contains("dim")) return root;
    fail(ErrorKind::invalid_input, std::string(where) + ": missing field 'algebra'");
}

RatMatrix random_combination(const std::vector<RatMatrix>& basis, std::size_t n,
                             SplitMix64& rng) {
    RatMatrix out(n, n);
    for (const RatMatrix& b : basis) {
        long c = rng.range(-2, 2);
        if (c != 0) out = out + Rat(c) * b;
    }
    return out;
}

// ---- subcommand handlers ----

CheckReport structure_and_pentagon(const Skeletal2Group& g) {
    CheckReport r = check_structure(g);
    if (r.all_passed()) r.merge(check_pentagon(g));
    return r;
}

Outcome h_check_2group(const Options& opt) {
    Skeletal2Group g = jd::group_from(jd::parse_text(opt.text), "2-group");
    cap_dim(g.order(), "pi0", opt);
    cap_dim(g.pi1_size(), "pi1", opt);
    Outcome out;
    out.checks = structure_and_pentagon(g);
    if (out.checks.all_passed()) {
        out.checks.merge(check_adjunction_zigzags(g));
        out.checks.merge(check_cor_for_i(g));
        out.checks.merge(check_tri_identity(g));
    }
    out.values["order"] = g.order();
    out.values["pi1_invariant_factors"] = jd::factors_json(g.pi1().group());
    return out;
}

Outcome h_tricomm(const Options& opt) {
    json root = jd::parse_text(opt.text);
    Skeletal2Group g = jd::group_from(jd::require(root, "group", "tricomm file"), "group");
    cap_dim(g.order(), "pi0", opt);
    cap_dim(g.pi1_size(), "pi1", opt);
    Outcome out;
    out.values["order"] = g.order();
    CheckReport valid = structure_and_pentagon(g);
    if (!valid.all_passed()) {
        out.checks = std::move(valid);
        return out;
    }
    out.checks.add("group_valid", true);

    const std::size_t n = g.order();
    std::vector<std::array<std::size_t, 3>> triples;
    const bool explicit_triples = root.contains("triples");
    if (explicit_triples) {
        const json& jt = root["triples"];
        if (!jt.is_array()) fail(ErrorKind::invalid_input, "triples: expected an array");
        for (std::size_t r = 0; r < jt.size(); ++r) {
            const json& row = jt[r];
            if (!row.is_array() || row.size() != 3)
                fail(ErrorKind::invalid_input,
                     "triples[" + std::to_string(r) + "]: expected three element indices");
            std::array<std::size_t, 3> t;
            for (std::size_t c = 0; c < 3; ++c) {
                t[c] = jd::index_from(row[c], "triples[" + std::to_string(r) + "]");
                if (t[c] >= n)
                    fail(ErrorKind::invalid_input,
                         "triples[" + std::to_string(r) + "]: element index out of range");
            }
            triples.push_back(t);
        }
    } else {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) triples.push_back({x, y, z});
    }

    Aggregate path;
    json labels = json::object();
    for (const auto& t : triples) {
        TricommResult res = tricomm(g, t[0], t[1], t[2]);
        path.note(res.path_independent,
                  "leftmost and rightmost reductions disagree at " +
                      jd::make_tuple_key({t[0], t[1], t[2]}));
        if (explicit_triples)
            labels[jd::make_tuple_key({t[0], t[1], t[2]})] =
                jd::pi1_elem_json(g.pi1(), res.label);
    }
    path.into(out.checks, "path_independence");
    if (explicit_triples)
        out.values["labels"] = std::move(labels);
    else
        out.values["triples_checked"] = triples.size();
    return out;
}

Outcome h_kernel_2group(const Options& opt) {
    json root = jd::parse_text(opt.text);
    Skeletal2Group src = jd::group_from(jd::require(root, "source", "hom file"), "source");
    Skeletal2Group dst = jd::group_from(jd::require(root, "target", "hom file"), "target");
    cap_dim(src.order(), "source pi0", opt);
    cap_dim(src.pi1_size(), "source pi1", opt);
    cap_dim(dst.order(), "target pi0", opt);
    cap_dim(dst.pi1_size(), "target pi1", opt);
    Hom2G f = jd::hom_from(root, src, dst);

    Outcome out;
    CheckReport sv = structure_and_pentagon(src);
    CheckReport tv = structure_and_pentagon(dst);
    if (!sv.all_passed() || !tv.all_passed()) {
        merge_prefixed(out.checks, sv, "source_");
        merge_prefixed(out.checks, tv, "target_");
        return out;
    }
    out.checks.add("source_valid", true);
    out.checks.add("target_valid", true);
    out.checks.merge(check_hom(src, dst, f));
    if (out.checks.all_passed()) {
        Kernel2G k = kernel(src, dst, f);
        out.values["kernel_pi1_invariant_factors"] = jd::factors_json(k.pi1);
        out.values["kernel_pi0_order"] = k.pi0_elements.size();
        out.values["kernel_pi0_abelian"] = k.pi0_abelian;
        if (k.pi0_invariants)
            out.values["kernel_pi0_invariant_factors"] = jd::factors_json(*k.pi0_invariants);
    }
    return out;
}

Outcome h_pi(const Options& opt) {
    Complex2 k = jd::complex_from(jd::parse_text(opt.text), "complex");
    cap_dim(k.n0(), "degree 0 term", opt);
    cap_dim(k.n1(), "degree -1 term", opt);
    validate_complex(k);
    ComplexHomotopy h = ch_pi(k);
    Outcome out;
    out.checks.add("complex_valid", true);
    out.values["ring"] = to_string(k.ring);
    out.values["pi0_invariant_factors"] = jd::factors_json(h.pi0);
    out.values["pi1_invariant_factors"] = jd::factors_json(h.pi1);
    out.values["pi0_free_rank"] = h.pi0.free_rank();
    out.values["pi1_free_rank"] = h.pi1.free_rank();
    return out;
}

Outcome flat_outcome(const Options& opt, bool hom) {
    json root = jd::parse_text(opt.text);
    Complex2 a = jd::complex_from(jd::require(root, "first", "complex pair"), "first");
    Complex2 b = jd::complex_from(jd::require(root, "second", "complex pair"), "second");
    cap_dim(a.n0(), "first degree 0 term", opt);
    cap_dim(a.n1(), "first degree -1 term", opt);
    cap_dim(b.n0(), "second degree 0 term", opt);
    cap_dim(b.n1(), "second degree -1 term", opt);
    validate_complex(a);
    validate_complex(b);
    Complex2 r = hom ? hom_flat(a, b) : tensor_flat(a, b);
    Outcome out;
    out.checks.add("inputs_valid", true);
    out.values["result"] = jd::complex_json(r);
    ComplexHomotopy h = ch_pi(r);
    out.values["result_pi0_rank"] = h.pi0.free_rank();
    out.values["result_pi1_rank"] = h.pi1.free_rank();
    return out;
}

Outcome h_hom_flat(const Options& opt) { return flat_outcome(opt, true); }
Outcome h_tensor_flat(const Options& opt) { return flat_outcome(opt, false); }

Outcome h_check_l2(const Options& opt) {
    L2Algebra a = jd::l2_from(jd::parse_text(opt.text));
    cap_dim(a.n0, "V^0", opt);
    cap_dim(a.n1, "V^-1", opt);
    validate_l2_shape(a);
    Outcome out;
    out.checks = check_identities(a);
    Cohomology2 c = cohomology(a);
    out.values["n1"] = a.n1;
    out.values["n0"] = a.n0;
    out.values["hm1_dim"] = c.hm1_dim();
    out.values["h0_dim"] = c.h0_dim();
    return out;
}

Outcome h_skewsym(const Options& opt) {
    PseudoL2Data p = jd::pseudo_from(jd::parse_text(opt.text));
    cap_dim(p.n0, "V^0", opt);
    cap_dim(p.n1, "V^-1", opt);
    validate_pseudo_shape(p);
    Outcome out;
    out.checks = check_pseudo(p);
    out.values["n1"] = p.n1;
    out.values["n0"] = p.n0;
    if (out.checks.all_passed()) out.values["skew"] = jd::l2_json(skew_symmetrize(p));
    return out;
}

Outcome h_perturb(const Options& opt) {
    L2Algebra a = jd::l2_from(jd::parse_text(opt.text));
    cap_dim(a.n0, "V^0", opt);
    cap_dim(a.n1, "V^-1", opt);
    validate_l2_shape(a);
    Outcome out;
    out.values["n1"] = a.n1;
    out.values["n0"] = a.n0;
    CheckReport input = check_identities(a);
    if (!input.all_passed()) {
        out.checks = std::move(input);
        return out;
    }
    out.checks.add("input_identities", true);

    SplitMix64 rng(opt.seed);
    Aggregate defects, roundtrip, output_ids;
    for (std::size_t c = 0; c < opt.cases; ++c) {
        std::vector<RatVec> q(a.n0 * a.n0, RatVec(a.n1));
        for (std::size_t i = 0; i < a.n0; ++i)
            for (std::size_t j = i; j < a.n0; ++j) {
                for (std::size_t h = 0; h < a.n1; ++h) q[i * a.n0 + j][h] = rng.range(-2, 2);
                q[j * a.n0 + i] = q[i * a.n0 + j];
            }
        PseudoL2Data p = perturb(a, q);
        CheckReport cp = check_pseudo(p);
        defects.note(cp.all_passed(), "case " + std::to_string(c) + ": " + first_failure(cp));
        L2Algebra b = skew_symmetrize(p);
        bool eq = b.l1 == a.l1 && b.l2_00 == a.l2_00 && b.l2_0m == a.l2_0m && b.l3 == a.l3;
        roundtrip.note(eq, "case " + std::to_string(c));
        CheckReport co = check_identities(b);
        output_ids.note(co.all_passed(), "case " + std::to_string(c) + ": " + first_failure(co));
    }
    defects.into(out.checks, "pseudo_defect_identities");
    roundtrip.into(out.checks, "roundtrip_exact");
    output_ids.into(out.checks, "output_identities");
    out.values["cases"] = opt.cases;
    return out;
}

Outcome h_hochschild(const Options& opt) {
    FinDimAlgebra a = jd::algebra_from(jd::parse_text(opt.text), "algebra");
    cap_dim(a.dim, "algebra", opt);
    validate_algebra(a);
    RatMatrix z = center(a);
    HH1 h = hh1(a);
    Ext1Context ctx = ext1_bimodule(a);
    Outcome out;
    bool agree = h.dim() == ctx.dim();
    out.checks.add("derivation_quotient_matches_bar_complex", agree,
                   agree ? std::string()
                         : "derivation quotient has dimension " + std::to_string(h.dim()) +
                               ", bar complex gives " + std::to_string(ctx.dim()));
    out.values["hh0"] = z.cols();
    out.values["hh1"] = h.dim();
    return out;
}

Outcome h_pi_map(const Options& opt) {
    json root = jd::parse_text(opt.text);
    FinDimAlgebra a = jd::algebra_from(jd::require(root, "algebra", "pi-map file"), "algebra");
    cap_dim(a.dim, "algebra", opt);
    validate_algebra(a);
    RatMatrix d = jd::rat_matrix_from(jd::require(root, "derivation", "pi-map file"),
                                      "derivation");
    if (d.rows() != a.dim || d.cols() != a.dim)
        fail(ErrorKind::invalid_input, "derivation: expected a dim x dim matrix");

    Outcome out;
    std::string witness;
    if (!leibniz_holds(a, d, witness)) {
        out.checks.add("derivation_leibniz", false, witness);
        return out;
    }
    out.checks.add("derivation_leibniz", true);

    PiResult res = pi_map(a, d);
    try {
        validate_extension(a, res.ext);
        out.checks.add("extension_valid", true);
    } catch (const Error& e) {
        out.checks.add("extension_valid", false, e.what());
    }
    Ext1Context ctx = ext1_bimodule(a);
    RatVec direct = ctx.class_coords(d);
    bool same = res.class_coords == direct;
    out.checks.add("class_matches_input_derivation", same,
                   same ? std::string()
                        : "extension class " + to_string(res.class_coords) +
                              " differs from cocycle class " + to_string(direct));
    out.values["class"] = jd::num_json(res.class_coords);
    out.values["ext1_dim"] = ctx.dim();
    out.values["extension"] = jd::extension_json(res.ext);
    return out;
}

Outcome h_baer(const Options& opt) {
    json root = jd::parse_text(opt.text);
    FinDimAlgebra a = jd::algebra_from(algebra_slot(root, "baer file"), "algebra");
    cap_dim(a.dim, "algebra", opt);
    validate_algebra(a);
    Ext1Context ctx = ext1_bimodule(a);
    Outcome out;
    out.values["ext1_dim"] = ctx.dim();

    if (root.contains("first") || root.contains("second")) {
        ExtensionSeq e1 = jd::extension_from(jd::require(root, "first", "baer file"), "first");
        ExtensionSeq e2 = jd::extension_from(jd::require(root, "second", "baer file"), "second");
        validate_extension(a, e1);
        validate_extension(a, e2);
        ExtensionSeq s = baer_sum(a, e1, e2);
        try {
            validate_extension(a, s);
            out.checks.add("sum_extension_valid", true);
        } catch (const Error& e) {
            out.checks.add("sum_extension_valid", false, e.what());
        }
        RatVec c1 = extension_class(a, ctx, e1);
        RatVec c2 = extension_class(a, ctx, e2);
        RatVec cs = extension_class(a, ctx, s);
        bool additive = cs == c1 + c2;
        out.checks.add("class_additivity", additive,
                       additive ? std::string()
                                : "sum has class " + to_string(cs) + ", expected " +
                                      to_string(c1 + c2));
        out.values["first_class"] = jd::num_json(c1);
        out.values["second_class"] = jd::num_json(c2);
        out.values["sum_class"] = jd::num_json(cs);
        return out;
    }

    // Sampling mode: random pairs from the derivation space, realized as
    // extensions through the pi construction.
    std::vector<RatMatrix> ders = derivations(a);
    SplitMix64 rng(opt.seed);
    Aggregate additive, split_iff_zero;
    for (std::size_t c = 0; c < opt.cases; ++c) {
        RatMatrix d1 = random_combination(ders, a.dim, rng);
        RatMatrix d2 = random_combination(ders, a.dim, rng);
        ExtensionSeq e1 = pi_map(a, d1).ext;
        ExtensionSeq e2 = pi_map(a, d2).ext;
        ExtensionSeq s = baer_sum(a, e1, e2);
        RatVec c1 = extension_class(a, ctx, e1);
        RatVec c2 = extension_class(a, ctx, e2);
        RatVec cs = extension_class(a, ctx, s);
        additive.note(cs == c1 + c2, "case " + std::to_string(c));
        bool zero = is_zero(cs);
        bool split = find_splitting(a, s).has_value();
        split_iff_zero.note(split == zero, "case " + std::to_string(c));
    }
    additive.into(out.checks, "class_additivity");
    split_iff_zero.into(out.checks, "splitting_iff_zero_class");
    out.values["cases"] = opt.cases;
    out.values["der_dim"] = ders.size();
    return out;
}

Outcome h_goodness(const Options& opt) {
    json root = jd::parse_text(opt.text);
    FinDimAlgebra a = jd::algebra_from(algebra_slot(root, "goodness file"), "algebra");
    cap_dim(a.dim, "algebra", opt);
    validate_algebra(a);

    std::vector<FDModule> samples;
    if (auto it = root.find("modules"); it != root.end()) {
        if (!it->is_array()) fail(ErrorKind::invalid_input, "modules: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            FDModule m = jd::module_from((*it)[i], "modules[" + std::to_string(i) + "]");
            cap_dim(m.dim, "modules[" + std::to_string(i) + "]", opt);
            samples.push_back(std::move(m));
        }
    } else {
        SplitMix64 rng(opt.seed);
        for (std::size_t c = 0; c < opt.cases; ++c)
            samples.push_back(sample_dual_module(a, rng, 4));
    }
    Outcome out;
    out.checks = goodness_square_check(a, samples);
    out.values["samples"] = samples.size();
    return out;
}

Outcome h_dual_comm(const Options& opt) {
    json root = jd::parse_text(opt.text);
    FinDimAlgebra a = jd::algebra_from(algebra_slot(root, "dual-comm file"), "algebra");
    cap_dim(a.dim, "algebra", opt);
    validate_algebra(a);
    Outcome out;

    auto commutator_checks = [&](const RatMatrix& d1, const RatMatrix& d2, Aggregate& unit,
                                 Aggregate& degree_one, Aggregate& coeff,
                                 const std::string& label) {
        Trunc22Matrix t = dual_number_commutator(a, d1, d2);
        unit.note(t.m0 == RatMatrix::identity(a.dim), label);
        degree_one.note(t.m1.is_zero() && t.m2.is_zero(), label);
        coeff.note(t.m12 == d1 * d2 - d2 * d1, label);
        return t;
    };

    const bool explicit_pair = root.contains("first") || root.contains("second");
    if (explicit_pair) {
        RatMatrix d1 = jd::rat_matrix_from(jd::require(root, "first", "dual-comm file"),
                                           "first");
        RatMatrix d2 = jd::rat_matrix_from(jd::require(root, "second", "dual-comm file"),
                                           "second");
        if (d1.rows() != a.dim || d1.cols() != a.dim || d2.rows() != a.dim ||
            d2.cols() != a.dim)
            fail(ErrorKind::invalid_input, "first/second: expected dim x dim matrices");
        std::string w1, w2;
        bool ok1 = leibniz_holds(a, d1, w1);
        bool ok2 = leibniz_holds(a, d2, w2);
        out.checks.add("first_derivation_leibniz", ok1, ok1 ? std::string() : w1);
        out.checks.add("second_derivation_leibniz", ok2, ok2 ? std::string() : w2);
        if (!ok1 || !ok2) return out;
        Aggregate unit, degree_one, coeff;
        Trunc22Matrix t = commutator_checks(d1, d2, unit, degree_one, coeff, "explicit pair");
        unit.into(out.checks, "degree_zero_identity");
        degree_one.into(out.checks, "degree_one_blocks_vanish");
        coeff.into(out.checks, "epsilon1_epsilon2_coefficient");
        out.values["commutator"] = jd::num_json(t.m12);
        return out;
    }

    std::vector<RatMatrix> ders = derivations(a);
    SplitMix64 rng(opt.seed);
    Aggregate unit, degree_one, coeff;
    for (std::size_t c = 0; c < opt.cases; ++c) {
        RatMatrix d1 = random_combination(ders, a.dim, rng);
        RatMatrix d2 = random_combination(ders, a.dim, rng);
        commutator_checks(d1, d2, unit, degree_one, coeff, "case " + std::to_string(c));
    }
    unit.into(out.checks, "degree_zero_identity");
    degree_one.into(out.checks, "degree_one_blocks_vanish");
    coeff.into(out.checks, "epsilon1_epsilon2_coefficient");
    out.values["cases"] = opt.cases;
    out.values["der_dim"] = ders.size();
    return out;
}

// ---- driver ----

using Handler = Outcome (*)(const Options&);

struct Command {
    const char* name;
    const char* help;
    Handler fn;
    bool randomized;
};

const Command kCommands[] = {
    {"check-2group", "structure, pentagon, and coherence checks on a skeletal 2-group",
     h_check_2group, false},
    {"tricomm", "path independence of the triple-commutator label", h_tricomm, false},
    {"kernel-2group", "homomorphism checks and the kernel 2-group", h_kernel_2group, false},
    {"pi", "homotopy groups of a 2-term complex", h_pi, false},
    {"hom-flat", "flattened hom complex of two rational complexes", h_hom_flat, false},
    {"tensor-flat", "flattened tensor complex of two rational complexes", h_tensor_flat,
     false},
    {"check-l2", "structure identities of a 2-term L-infinity algebra", h_check_l2, false},
    {"skewsym", "defect identities and skew-symmetrization of pseudo data", h_skewsym,
     false},
    {"perturb", "seeded perturbation roundtrips on a valid 2-term algebra", h_perturb,
     true},
    {"hochschild", "HH^0 and HH^1 of a finite-dimensional algebra", h_hochschild, false},
    {"pi-map", "extension attached to a derivation, with its class", h_pi_map, false},
    {"baer", "Baer sums against Ext^1 coordinate addition", h_baer, true},
    {"goodness", "unit/counit bijectivity for the dual-numbers square", h_goodness, true},
    {"dual-comm", "commutator of dual-number automorphisms", h_dual_comm, true},
};

std::string render(const json& report, bool pretty) {
    if (!pretty) return report.dump() + "\n";
    std::ostringstream os;
    os << "command: " << report["command"].get<std::string>() << "\n";
    if (report.contains("input_digest"))
        os << "input digest: " << report["input_digest"].get<std::string>() << "\n";
    if (report.contains("error")) {
        const json& e = report["error"];
        os << "error (" << e["kind"].get<std::string>() << "): "
           << e["message"].get<std::string>() << "\n";
        return os.str();
    }
    os << "checks:\n";
    for (const json& c : report["checks"]) {
        bool pass = c["status"].get<std::string>() == "pass";
        os << "  [" << (pass ? "pass" : "FAIL") << "] " << c["name"].get<std::string>();
        if (c.contains("witness")) os << "  -- " << c["witness"].get<std::string>();
        os << "\n";
    }
    os << "values:\n";
    for (const auto& [key, v] : report["values"].items()) {
        os << "  " << key << ": ";
        if (v.is_string())
            os << v.get<std::string>();
        else
            os << v.dump();
        os << "\n";
    }
    return os.str();
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact computational checks for 2-groups, 2-term L-infinity algebras, "
                 "and module-category models"};
    app.name("cat2alg");
    app.require_subcommand(1);

    std::string path;
    bool pretty = false;
    std::uint64_t seed = 0;
    std::size_t cases = 100;
    const Command* chosen = nullptr;
    for (const Command& c : kCommands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", path, "input JSON file")->required();
        sub->add_flag("--pretty", pretty, "human-readable text report");
        if (c.randomized) {
            sub->add_option("--seed", seed, "RNG seed (default 0)");
            sub->add_option("--cases", cases, "number of sampled cases (default 100)");
        }
        sub->callback([&chosen, cmd = &c]() { chosen = cmd; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        json report = json::object();
        report["command"] = args.empty() ? std::string() : args[0];
        report["error"] =
            json::object({{"kind", "invalid_input"}, {"message", std::string(e.what())}});
        return {2, report.dump() + "\n"};
    }

    Options opt;
    opt.input_path = path;
    opt.pretty = pretty;
    opt.seed = seed;
    opt.cases = cases;
    opt.max_dim = max_dim_from_env();

    json report = json::object();
    report["command"] = chosen->name;
    int code = 0;

    std::ifstream in(opt.input_path, std::ios::binary);
    if (!in) {
        report["error"] = json::object(
            {{"kind", "invalid_input"},
             {"message", "cannot read input file '" + opt.input_path + "'"}});
        code = 2;
    } else {
        std::ostringstream ss;
        ss << in.rdbuf();
        opt.text = ss.str();
        report["input_digest"] = fnv1a_hex(opt.text);
        try {
            Outcome out = chosen->fn(opt);
            json checks = json::array();
            for (const CheckItem& it : out.checks.items) {
                json c = json::object();
                c["name"] = it.name;
                c["status"] = it.passed ? "pass" : "fail";
                if (!it.witness.empty()) c["witness"] = it.witness;
                checks.push_back(std::move(c));
            }
            report["checks"] = std::move(checks);
            report["values"] = std::move(out.values);
            code = out.checks.all_passed() ? 0 : 1;
        } catch (const Error& e) {
            report["error"] = json::object(
                {{"kind", to_string(e.kind())}, {"message", std::string(e.what())}});
            code = 2;
        } catch (const std::exception& e) {
            report["error"] = json::object(
                {{"kind", "invalid_input"}, {"message", std::string(e.what())}});
            code = 2;
        }
    }
    return {code, render(report, opt.pretty)};
}

} // namespace cat2alg
