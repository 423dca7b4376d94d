#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cat2alg/cli.hpp>
#include <cat2alg/error.hpp>
#include <cat2alg/json_io.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace cat2alg;
using nlohmann::json;

namespace {

// Every fixture lives in one per-process scratch directory so parallel
// ctest runs cannot collide.
std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("cat2alg_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << text;
    out.close();
    REQUIRE(out.good());
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

json report_of(const CliResult& r) { return json::parse(r.output); }

// Names of failing checks, in report order.
std::vector<std::string> failed_names(const json& rep) {
    std::vector<std::string> out;
    for (const auto& c : rep.at("checks"))
        if (c.at("status") == "fail") out.push_back(c.at("name"));
    return out;
}

const char* kZ2Group = R"json({
  "pi0_table": [[0, 1], [1, 0]],
  "pi1_invariant_factors": [2],
  "action": [[0, 1], [0, 1]],
  "alpha": {"(1,1,1)": 1}
})json";

const char* kM2Algebra = R"json({
  "dim": 4,
  "mult": [
    [[1,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,0,0]],
    [[0,0,0,0],[0,0,0,0],[1,0,0,0],[0,1,0,0]],
    [[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]],
    [[0,0,0,0],[0,0,0,0],[0,0,1,0],[0,0,0,1]]
  ],
  "unit": [1, 0, 0, 1]
})json";

const char* kDualNumbers = R"json({
  "dim": 2,
  "mult": [[[1,0],[0,1]],[[0,1],[0,0]]],
  "unit": [1, 0]
})json";

// l2_0m breaks the mixed Jacobi identity while everything else is fine.
const char* kBrokenL2 = R"json({
  "n1": 1, "n0": 2,
  "l1": [["0"], ["0"]],
  "l2_00": {"(0,1)->0": "1"},
  "l2_0m": {"(0,0)->0": "1", "(1,0)->0": "2"}
})json";

}  // namespace

TEST_CASE("cli: unknown subcommand and missing input exit 2") {
    CliResult r = run_cli({"frobnicate"});
    CHECK(r.exit_code == 2);
    json rep = report_of(r);
    CHECK(rep.contains("error"));

    r = run_cli({"check-2group", (scratch_dir() / "no_such_file.json").string()});
    CHECK(r.exit_code == 2);
    rep = report_of(r);
    CHECK(rep.at("error").at("message").get<std::string>().find("cannot read") !=
          std::string::npos);
}

TEST_CASE("cli: malformed json is an input error with a digest") {
    std::string path = write_fixture("garbage.json", "{ not json");
    CliResult r = run_cli({"pi", path});
    CHECK(r.exit_code == 2);
    json rep = report_of(r);
    CHECK(rep.at("error").at("kind") == "invalid_input");
    CHECK(rep.at("input_digest").get<std::string>().size() == 16);
}

TEST_CASE("cli: check-2group passes on a valid group and reports its shape") {
    std::string path = write_fixture("z2.json", kZ2Group);
    CliResult r = run_cli({"check-2group", path});
    CHECK(r.exit_code == 0);
    json rep = report_of(r);
    CHECK(rep.at("command") == "check-2group");
    CHECK(failed_names(rep).empty());
    CHECK(rep.at("values").at("order") == 2);
    CHECK(rep.at("values").at("pi1_invariant_factors") == json::array({"2"}));

    std::vector<std::string> names;
    for (const auto& c : rep.at("checks")) names.push_back(c.at("name"));
    for (const char* expected :
         {"pi0_identity", "pentagon", "zigzag_on_object", "cor_for_i_square",
          "tri_identity"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
}

TEST_CASE("cli: a pentagon violation fails with a witness") {
    // Z/2 x trivial action with alpha(1,1,1) = 1 over pi1 = Z/3: dalpha != 0.
    std::string path = write_fixture("bad_alpha.json", R"json({
      "pi0_table": [[0, 1], [1, 0]],
      "pi1_invariant_factors": [3],
      "action": [[0, 1, 2], [0, 1, 2]],
      "alpha": {"(1,1,1)": 1}
    })json");
    CliResult r = run_cli({"check-2group", path});
    CHECK(r.exit_code == 1);
    json rep = report_of(r);
    auto failed = failed_names(rep);
    REQUIRE(!failed.empty());
    CHECK(failed.front() == "pentagon");
    for (const auto& c : rep.at("checks"))
        if (c.at("name") == "pentagon") CHECK(!c.at("witness").get<std::string>().empty());
}

TEST_CASE("cli: reports are byte-identical across runs") {
    std::string path = write_fixture("z2_det.json", kZ2Group);
    CliResult a = run_cli({"check-2group", path});
    CliResult b = run_cli({"check-2group", path});
    CHECK(a.output == b.output);
    CliResult c = run_cli({"goodness", write_fixture("q2_det.json", kDualNumbers),
                           "--seed", "7", "--cases", "3"});
    CliResult d = run_cli({"goodness", (scratch_dir() / "q2_det.json").string(),
                           "--seed", "7", "--cases", "3"});
    CHECK(c.output == d.output);
    CHECK(c.exit_code == 0);
}

TEST_CASE("cli: check-l2 failure carries the offending triple") {
    std::string path = write_fixture("broken_l2.json", kBrokenL2);
    CliResult r = run_cli({"check-l2", path});
    CHECK(r.exit_code == 1);
    json rep = report_of(r);
    bool found = false;
    for (const auto& c : rep.at("checks"))
        if (c.at("name") == "jacobi_mixed" && c.at("status") == "fail") {
            found = true;
            CHECK(c.at("witness").get<std::string>().find("(0,1,0)") !=
                  std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("cli: hochschild reports hh0 and hh1") {
    CliResult r = run_cli({"hochschild", write_fixture("m2.json", kM2Algebra)});
    CHECK(r.exit_code == 0);
    json rep = report_of(r);
    CHECK(rep.at("values").at("hh0") == 1);
    CHECK(rep.at("values").at("hh1") == 0);

    r = run_cli({"hochschild", write_fixture("q2.json", kDualNumbers)});
    CHECK(r.exit_code == 0);
    rep = report_of(r);
    CHECK(rep.at("values").at("hh0") == 2);
    CHECK(rep.at("values").at("hh1") == 1);
}

TEST_CASE("cli: randomized subcommands accept seed and cases") {
    std::string path = write_fixture("q2_rand.json", kDualNumbers);
    for (const char* cmd : {"baer", "goodness", "dual-comm"}) {
        CliResult r = run_cli({cmd, path, "--seed", "3", "--cases", "4"});
        CHECK(r.exit_code == 0);
        json rep = report_of(r);
        CHECK(failed_names(rep).empty());
    }
}

TEST_CASE("cli: dimension cap from the environment") {
    std::string path = write_fixture("m2_cap.json", kM2Algebra);
    REQUIRE(::setenv("CAT2ALG_MAX_DIM", "3", 1) == 0);
    CliResult r = run_cli({"hochschild", path});
    REQUIRE(::unsetenv("CAT2ALG_MAX_DIM") == 0);
    CHECK(r.exit_code == 2);
    json rep = report_of(r);
    CHECK(rep.at("error").at("kind") == "unsupported");
    CHECK(rep.at("error").at("message").get<std::string>().find("CAT2ALG_MAX_DIM") !=
          std::string::npos);
}

TEST_CASE("cli: pretty mode renders text instead of json") {
    std::string path = write_fixture("z2_pretty.json", kZ2Group);
    CliResult r = run_cli({"check-2group", path, "--pretty"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("command: check-2group") != std::string::npos);
    CHECK(r.output.find("[pass] pentagon") != std::string::npos);
    CHECK(r.output.find('{') == std::string::npos);
}

TEST_CASE("cli: help lists every subcommand") {
    CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    for (const char* cmd : {"check-2group", "tricomm", "kernel-2group", "pi",
                            "hom-flat", "tensor-flat", "check-l2", "skewsym",
                            "perturb", "hochschild", "pi-map", "baer", "goodness",
                            "dual-comm"})
        CHECK(r.output.find(cmd) != std::string::npos);
}

TEST_CASE("json_io: 2-group roundtrip preserves every table") {
    Skeletal2Group g = parse_2group(kZ2Group);
    Skeletal2Group h = parse_2group(serialize_2group(g));
    CHECK(h.pi0_table() == g.pi0_table());
    CHECK(h.action_table() == g.action_table());
    CHECK(h.alpha_table() == g.alpha_table());
    CHECK(h.pi1().group().factors() == g.pi1().group().factors());
}

TEST_CASE("json_io: pi1 elements accepted as index or tuple") {
    // alpha given as a coordinate tuple instead of a flat index.
    Skeletal2Group g = parse_2group(R"json({
      "pi0_table": [[0, 1], [1, 0]],
      "pi1_invariant_factors": [2, 4],
      "action": [[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7]],
      "alpha": {"(1,1,1)": [1, 5]}
    })json");
    // Tuple entries are reduced mod the invariant factors: (1, 5) = (1, 1).
    Skeletal2Group h = parse_2group(R"json({
      "pi0_table": [[0, 1], [1, 0]],
      "pi1_invariant_factors": [2, 4],
      "action": [[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7]],
      "alpha": {"(1,1,1)": [1, 1]}
    })json");
    CHECK(g.alpha_table() == h.alpha_table());
    CHECK(g.alpha(1, 1, 1) != 0);
}

TEST_CASE("json_io: complex roundtrip and degenerate shapes") {
    Complex2 k = parse_complex(R"json({"ring": "Z", "d": [["2", "0"]],
                                   "K_minus1_relations": [[3, 0]]})json");
    Complex2 k2 = parse_complex(serialize_complex(k));
    CHECK(k2.ring == Ring::Z);
    CHECK(k2.d == k.d);
    CHECK(k2.rel_m1 == k.rel_m1);
    CHECK(k2.rel_0 == k.rel_0);

    // A zero differential with no rows needs explicit sizes.
    Complex2 z = parse_complex(R"json({"ring": "Q", "d": [], "n1": 2, "n0": 0})json");
    CHECK(z.n1() == 2);
    CHECK(z.n0() == 0);
}

TEST_CASE("json_io: l2 roundtrip is tensor-exact") {
    L2Algebra l = parse_l2(R"json({
      "n1": 1, "n0": 2,
      "l1": [["1"], ["0"]],
      "l2_00": {"(1,0)->0": "-3/2"},
      "l2_0m": {"(0,0)->0": "2"},
      "l3": {}
    })json");
    L2Algebra l2 = parse_l2(serialize_l2(l));
    CHECK(l2.n1 == l.n1);
    CHECK(l2.n0 == l.n0);
    CHECK(l2.l1 == l.l1);
    CHECK(l2.l2_00 == l.l2_00);
    CHECK(l2.l2_0m == l.l2_0m);
    CHECK(l2.l3 == l.l3);
    // The mirrored key was stored with the sign flipped.
    CHECK(l.l2_00[0 * 2 + 1][0] == Rat(3, 2));
}

TEST_CASE("json_io: pseudo roundtrip keeps all five blocks") {
    PseudoL2Data p = parse_pseudo(R"json({
      "n1": 1, "n0": 1, "d": [["1"]],
      "lt2_00": {"(0,0)->0": "2"},
      "lt2_m0": {"(0,0)->0": "2"},
      "s": {"(0,0)->0": "4"},
      "lt3": {"(0,0,0)->0": "12"}
    })json");
    PseudoL2Data q = parse_pseudo(serialize_pseudo(p));
    CHECK(q.d == p.d);
    CHECK(q.lt2_00 == p.lt2_00);
    CHECK(q.lt2_0m == p.lt2_0m);
    CHECK(q.lt2_m0 == p.lt2_m0);
    CHECK(q.s == p.s);
    CHECK(q.lt3 == p.lt3);
}

TEST_CASE("json_io: algebra and module roundtrips") {
    FinDimAlgebra a = parse_algebra(kM2Algebra);
    FinDimAlgebra b = parse_algebra(serialize_algebra(a));
    CHECK(b.dim == a.dim);
    CHECK(b.mult == a.mult);
    CHECK(b.unit == a.unit);

    FDModule m = parse_fdmodule(R"json({
      "dim": 1,
      "action": [[["1"]], [["0"]]]
    })json");
    FDModule m2 = parse_fdmodule(serialize_fdmodule(m));
    CHECK(m2.dim == m.dim);
    CHECK(m2.action == m.action);
}

TEST_CASE("json_io: rationals canonicalize and floats are rejected") {
    L2Algebra l = parse_l2(R"json({"n1": 1, "n0": 1, "l1": [["2/4"]]})json");
    CHECK(l.l1.at(0, 0) == Rat(1, 2));

    try {
        parse_l2(R"json({"n1": 1, "n0": 1, "l1": [[0.5]]})json");
        FAIL("floating point accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_input);
        CHECK(std::string(e.what()).find("floating point") != std::string::npos);
    }

    try {
        parse_l2(R"json({"n1": 1, "n0": 1, "l1": [["1/0"]]})json");
        FAIL("zero denominator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_input);
    }
}

TEST_CASE("json_io: antisymmetry of l2_00 is enforced on input") {
    try {
        parse_l2(R"json({"n1": 1, "n0": 2, "l1": [["0"], ["0"]],
                     "l2_00": {"(0,1)->0": "1", "(1,0)->0": "1"}})json");
        FAIL("conflicting mirror entries accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("antisymmetry") != std::string::npos);
    }

    try {
        parse_l2(R"json({"n1": 1, "n0": 2, "l1": [["0"], ["0"]],
                     "l2_00": {"(1,1)->0": "1"}})json");
        FAIL("nonzero diagonal accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("vanish") != std::string::npos);
    }
}

TEST_CASE("cli: spawned binary agrees with the in-process driver") {
    std::string bin = CAT2ALG_BIN_PATH;
    REQUIRE(std::filesystem::exists(bin));
    std::string input = write_fixture("z2_spawn.json", kZ2Group);
    std::string outfile = (scratch_dir() / "spawn_out.txt").string();

    auto spawn = [&](const std::string& args) {
        std::string cmd = "'" + bin + "' " + args + " > '" + outfile + "' 2>&1";
        int rc = std::system(cmd.c_str());
        REQUIRE(rc != -1);
        REQUIRE(WIFEXITED(rc));
        return WEXITSTATUS(rc);
    };

    int code = spawn("check-2group '" + input + "'");
    CliResult r = run_cli({"check-2group", input});
    CHECK(code == r.exit_code);
    CHECK(read_file(outfile) == r.output);

    std::string broken = write_fixture("broken_spawn.json", kBrokenL2);
    code = spawn("check-l2 '" + broken + "'");
    r = run_cli({"check-l2", broken});
    CHECK(code == 1);
    CHECK(code == r.exit_code);
    CHECK(read_file(outfile) == r.output);

    code = spawn("frobnicate x");
    CHECK(code == 2);
}
