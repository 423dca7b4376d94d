// JSON conversion layer. Numeric exactness is the whole point of the
// library, so every ring element travels as a decimal string; plain JSON
// integers are accepted for convenience and floats are refused outright.
// Combinatorial indices (group elements, dimensions, table positions) stay
// plain integers.
#include "cat2alg/json_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json_detail.hpp"

namespace cat2alg::jsondetail {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    fail(ErrorKind::invalid_input, where + ": " + what);
}

std::string at(const std::string& where, std::size_t i) {
    return where + "[" + std::to_string(i) + "]";
}

std::string at(const std::string& where, std::size_t i, std::size_t j) {
    return where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

} // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::invalid_input, std::string("JSON parse error: ") + e.what());
    }
}

const json& require(const json& v, const char* field, const std::string& where) {
    if (!v.is_object()) bad(where, "expected a JSON object");
    auto it = v.find(field);
    if (it == v.end()) bad(where, std::string("missing field '") + field + "'");
    return *it;
}

Int int_from(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return Int(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) return Int(std::to_string(v.get<std::int64_t>()));
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        try {
            return Int(s, 10);
        } catch (const std::invalid_argument&) {
            bad(where, "cannot parse integer '" + s + "'");
        }
    }
    if (v.is_number_float())
        bad(where, "floating point is not accepted; use a decimal string");
    bad(where, "expected an integer or a decimal string");
}

Rat rat_from(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return Rat(Int(std::to_string(v.get<std::uint64_t>())));
    if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<std::int64_t>())));
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        Rat r;
        try {
            r = Rat(s, 10);
        } catch (const std::invalid_argument&) {
            bad(where, "cannot parse rational '" + s + "'");
        }
        if (r.get_den() == 0) bad(where, "zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    }
    if (v.is_number_float())
        bad(where, "floating point is not accepted; use a decimal string");
    bad(where, "expected a rational as integer or 'p/q' string");
}

std::size_t index_from(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return static_cast<std::size_t>(v.get<std::uint64_t>());
    if (v.is_number_integer()) {
        std::int64_t x = v.get<std::int64_t>();
        if (x < 0) bad(where, "negative index");
        return static_cast<std::size_t>(x);
    }
    bad(where, "expected a nonnegative integer");
}

long signed_from(const json& v, const std::string& where) {
    if (v.is_number_integer() || v.is_number_unsigned()) {
        std::int64_t x = v.get<std::int64_t>();
        return static_cast<long>(x);
    }
    bad(where, "expected an integer");
}

json num_json(const Int& x) { return json(x.get_str()); }

json num_json(const Rat& x) { return json(x.get_str()); }

json num_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(num_json(x));
    return out;
}

json num_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(num_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json num_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(num_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json factors_json(const FinAbGroup& g) {
    json out = json::array();
    for (const Int& d : g.factors()) out.push_back(num_json(d));
    return out;
}

RatVec rat_vec_from(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where, "expected an array");
    RatVec out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rat_from(v[i], at(where, i)));
    return out;
}

RatMatrix rat_matrix_from(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where, "expected an array of rows");
    std::size_t rows = v.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!v[0].is_array()) bad(at(where, 0), "expected an array");
        cols = v[0].size();
    }
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            bad(at(where, i), "rows must all have length " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rat_from(v[i][j], at(where, i, j));
    }
    return m;
}

IntMatrix int_matrix_from(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where, "expected an array of rows");
    std::size_t rows = v.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!v[0].is_array()) bad(at(where, 0), "expected an array");
        cols = v[0].size();
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            bad(at(where, i), "rows must all have length " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = int_from(v[i][j], at(where, i, j));
    }
    return m;
}

namespace {

std::vector<std::size_t> parse_key(const std::string& key, std::size_t count, bool arrow,
                                   const std::string& where) {
    std::size_t pos = 0;
    auto malformed = [&]() { bad(where, "malformed key '" + key + "'"); };
    auto skip_ws = [&]() {
        while (pos < key.size() && key[pos] == ' ') ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= key.size() || key[pos] != c) malformed();
        ++pos;
    };
    auto number = [&]() -> std::size_t {
        skip_ws();
        std::size_t start = pos;
        while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
        if (pos == start) malformed();
        return static_cast<std::size_t>(std::stoull(key.substr(start, pos - start)));
    };
    std::vector<std::size_t> out;
    out.reserve(count + (arrow ? 1 : 0));
    expect('(');
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0) expect(',');
        out.push_back(number());
    }
    expect(')');
    if (arrow) {
        expect('-');
        if (pos >= key.size() || key[pos] != '>') malformed();
        ++pos;
        out.push_back(number());
    }
    skip_ws();
    if (pos != key.size()) malformed();
    return out;
}

} // namespace

std::vector<std::size_t> key_indices(const std::string& key, std::size_t inputs,
                                     const std::string& where) {
    return parse_key(key, inputs, true, where);
}

std::string make_key(const std::vector<std::size_t>& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(idx[i]);
    }
    out += ")->";
    out += std::to_string(idx.back());
    return out;
}

std::vector<std::size_t> tuple_key(const std::string& key, std::size_t count,
                                   const std::string& where) {
    return parse_key(key, count, false, where);
}

std::string make_tuple_key(const std::vector<std::size_t>& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(idx[i]);
    }
    out += ")";
    return out;
}

std::size_t pi1_elem_from(const AbelianElements& pi1, const json& v,
                          const std::string& where) {
    if (v.is_array()) {
        const auto& fs = pi1.group().factors();
        if (v.size() != fs.size())
            bad(where, "tuple length does not match the invariant factors");
        std::vector<long> t(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            long d = static_cast<long>(fs[i].get_si());
            long x = signed_from(v[i], at(where, i));
            t[i] = ((x % d) + d) % d;
        }
        return pi1.index(t);
    }
    std::size_t idx = index_from(v, where);
    if (idx >= pi1.size()) bad(where, "element index out of range");
    return idx;
}

json pi1_elem_json(const AbelianElements& pi1, std::size_t idx) {
    if (pi1.group().factors().size() == 1) return json(idx);
    json out = json::array();
    for (long c : pi1.tuple(idx)) out.push_back(c);
    return out;
}

Skeletal2Group group_from(const json& v, const std::string& where) {
    const json& jt = require(v, "pi0_table", where);
    if (!jt.is_array()) bad(where + ".pi0_table", "expected an array of rows");
    std::vector<std::vector<std::size_t>> table;
    table.reserve(jt.size());
    for (std::size_t i = 0; i < jt.size(); ++i) {
        const json& row = jt[i];
        if (!row.is_array()) bad(at(where + ".pi0_table", i), "expected an array");
        std::vector<std::size_t> r;
        r.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            r.push_back(index_from(row[j], at(where + ".pi0_table", i, j)));
        table.push_back(std::move(r));
    }
    const std::size_t n = table.size();

    const json& jf = require(v, "pi1_invariant_factors", where);
    if (!jf.is_array()) bad(where + ".pi1_invariant_factors", "expected an array");
    std::vector<Int> factors;
    factors.reserve(jf.size());
    for (std::size_t i = 0; i < jf.size(); ++i)
        factors.push_back(int_from(jf[i], at(where + ".pi1_invariant_factors", i)));
    FinAbGroup pi1_group(std::move(factors));
    if (!pi1_group.is_finite())
        bad(where + ".pi1_invariant_factors", "the fundamental group must be finite");
    AbelianElements pi1(pi1_group);

    const json& ja = require(v, "action", where);
    if (!ja.is_array()) bad(where + ".action", "expected an array of rows");
    std::vector<std::vector<std::size_t>> action;
    action.reserve(ja.size());
    for (std::size_t i = 0; i < ja.size(); ++i) {
        const json& row = ja[i];
        if (!row.is_array()) bad(at(where + ".action", i), "expected an array");
        std::vector<std::size_t> r;
        r.reserve(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            r.push_back(pi1_elem_from(pi1, row[j], at(where + ".action", i, j)));
        action.push_back(std::move(r));
    }

    std::vector<std::size_t> alpha(n * n * n, 0);
    if (auto it = v.find("alpha"); it != v.end()) {
        if (!it->is_object()) bad(where + ".alpha", "expected an object");
        for (const auto& [key, val] : it->items()) {
            auto idx = tuple_key(key, 3, where + ".alpha");
            if (idx[0] >= n || idx[1] >= n || idx[2] >= n)
                bad(where + ".alpha", "object index out of range in '" + key + "'");
            alpha[(idx[0] * n + idx[1]) * n + idx[2]] =
                pi1_elem_from(pi1, val, where + ".alpha['" + key + "']");
        }
    }

    return Skeletal2Group(std::move(table), std::move(pi1_group), std::move(action),
                          std::move(alpha));
}

json group_json(const Skeletal2Group& g) {
    json o = json::object();
    o["pi0_table"] = g.pi0_table();
    o["pi1_invariant_factors"] = factors_json(g.pi1().group());
    json action = json::array();
    for (const auto& row : g.action_table()) {
        json r = json::array();
        for (std::size_t a : row) r.push_back(pi1_elem_json(g.pi1(), a));
        action.push_back(std::move(r));
    }
    o["action"] = std::move(action);
    json alpha = json::object();
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::size_t a = g.alpha(x, y, z);
                if (a != 0) alpha[make_tuple_key({x, y, z})] = pi1_elem_json(g.pi1(), a);
            }
    o["alpha"] = std::move(alpha);
    return o;
}

Hom2G hom_from(const json& v, const Skeletal2Group& src, const Skeletal2Group& dst) {
    Hom2G f;
    const json& j0 = require(v, "f0", "hom");
    if (!j0.is_array() || j0.size() != src.order())
        bad("hom.f0", "expected one target index per source element");
    f.f0.reserve(j0.size());
    for (std::size_t i = 0; i < j0.size(); ++i) {
        std::size_t x = index_from(j0[i], at("hom.f0", i));
        if (x >= dst.order()) bad(at("hom.f0", i), "target index out of range");
        f.f0.push_back(x);
    }
    f.f1 = int_matrix_from(require(v, "f1", "hom"), "hom.f1");
    const std::size_t n = src.order();
    f.gamma.assign(n * n, 0);
    if (auto it = v.find("gamma"); it != v.end()) {
        if (!it->is_object()) bad("hom.gamma", "expected an object");
        for (const auto& [key, val] : it->items()) {
            auto idx = tuple_key(key, 2, "hom.gamma");
            if (idx[0] >= n || idx[1] >= n)
                bad("hom.gamma", "element index out of range in '" + key + "'");
            f.gamma[idx[0] * n + idx[1]] =
                pi1_elem_from(dst.pi1(), val, "hom.gamma['" + key + "']");
        }
    }
    return f;
}

Complex2 complex_from(const json& v, const std::string& where) {
    Complex2 k;
    const json& jr = require(v, "ring", where);
    if (!jr.is_string()) bad(where + ".ring", "expected \"Z\" or \"Q\"");
    const std::string ring = jr.get<std::string>();
    if (ring == "Z") k.ring = Ring::Z;
    else if (ring == "Q") k.ring = Ring::Q;
    else bad(where + ".ring", "expected \"Z\" or \"Q\"");

    k.d = rat_matrix_from(require(v, "d", where), where + ".d");
    std::size_t n0 = k.d.rows();
    std::size_t n1 = k.d.cols();
    if (auto it = v.find("n0"); it != v.end()) n0 = index_from(*it, where + ".n0");
    if (auto it = v.find("n1"); it != v.end()) n1 = index_from(*it, where + ".n1");
    if (n0 != k.d.rows() || n1 != k.d.cols()) {
        // Nested arrays cannot spell a 0 x n matrix, so explicit dimensions
        // may replace an empty "d" when one side is zero.
        if (k.d.rows() == 0 && k.d.cols() == 0 && (n0 == 0 || n1 == 0))
            k.d = RatMatrix(n0, n1);
        else
            bad(where, "n0/n1 disagree with the shape of d");
    }
    k.rel_m1 = IntMatrix(0, n1);
    k.rel_0 = IntMatrix(0, n0);
    if (auto it = v.find("K_minus1_relations"); it != v.end())
        k.rel_m1 = int_matrix_from(*it, where + ".K_minus1_relations");
    if (auto it = v.find("K0_relations"); it != v.end())
        k.rel_0 = int_matrix_from(*it, where + ".K0_relations");
    // An empty relation list carries no column count of its own.
    if (k.rel_m1.rows() == 0) k.rel_m1 = IntMatrix(0, n1);
    if (k.rel_0.rows() == 0) k.rel_0 = IntMatrix(0, n0);
    return k;
}

json complex_json(const Complex2& k) {
    json o = json::object();
    o["ring"] = to_string(k.ring);
    o["n0"] = k.n0();
    o["n1"] = k.n1();
    o["d"] = num_json(k.d);
    o["K_minus1_relations"] = num_json(k.rel_m1);
    o["K0_relations"] = num_json(k.rel_0);
    return o;
}

namespace {

void reject_integer_ring(const json& v, const std::string& where) {
    if (auto it = v.find("ring"); it != v.end()) {
        if (it->is_string() && it->get<std::string>() == "Z")
            bad(where, "coefficients here are rational; \"ring\": \"Z\" is not supported");
        if (!it->is_string() || it->get<std::string>() != "Q")
            bad(where + ".ring", "expected \"Q\"");
    }
}

int perm3_sign(std::size_t i, std::size_t j, std::size_t k) {
    int inv = (i > j) + (i > k) + (j > k);
    return inv % 2 == 0 ? 1 : -1;
}

// A plain sparse block with no symmetry: duplicate coordinates are refused
// so that two spellings of one key cannot silently disagree.
void fill_plain_block(const json& v, const std::string& where, std::size_t lim_a,
                      std::size_t lim_b, std::size_t lim_out, std::size_t stride,
                      std::vector<RatVec>& table) {
    if (!v.is_object()) bad(where, "expected an object");
    std::set<std::array<std::size_t, 3>> seen;
    for (const auto& [key, val] : v.items()) {
        auto idx = key_indices(key, 2, where);
        if (idx[0] >= lim_a || idx[1] >= lim_b || idx[2] >= lim_out)
            bad(where, "index out of range in '" + key + "'");
        if (!seen.insert({idx[0], idx[1], idx[2]}).second)
            bad(where, "duplicate entry for '" + key + "'");
        table[idx[0] * stride + idx[1]][idx[2]] = rat_from(val, where + "['" + key + "']");
    }
}

void fill_antisymmetric_block(const json& v, const std::string& where, std::size_t lim,
                              std::size_t lim_out, std::vector<RatVec>& table) {
    if (!v.is_object()) bad(where, "expected an object");
    std::map<std::array<std::size_t, 3>, Rat> canon;
    for (const auto& [key, val] : v.items()) {
        auto idx = key_indices(key, 2, where);
        std::size_t i = idx[0], j = idx[1], k = idx[2];
        if (i >= lim || j >= lim || k >= lim_out)
            bad(where, "index out of range in '" + key + "'");
        Rat r = rat_from(val, where + "['" + key + "']");
        if (i == j) {
            if (r != 0) bad(where, "antisymmetry forces '" + key + "' to vanish");
            continue;
        }
        Rat c = i < j ? r : Rat(-r);
        auto slot = canon.emplace(std::array<std::size_t, 3>{std::min(i, j), std::max(i, j), k}, c);
        if (!slot.second && slot.first->second != c)
            bad(where, "'" + key + "' conflicts with antisymmetry");
    }
    for (const auto& [pos, val] : canon) {
        table[pos[0] * lim + pos[1]][pos[2]] = val;
        table[pos[1] * lim + pos[0]][pos[2]] = -val;
    }
}

void fill_symmetric_block(const json& v, const std::string& where, std::size_t lim,
                          std::size_t lim_out, std::vector<RatVec>& table) {
    if (!v.is_object()) bad(where, "expected an object");
    std::map<std::array<std::size_t, 3>, Rat> canon;
    for (const auto& [key, val] : v.items()) {
        auto idx = key_indices(key, 2, where);
        std::size_t i = idx[0], j = idx[1], k = idx[2];
        if (i >= lim || j >= lim || k >= lim_out)
            bad(where, "index out of range in '" + key + "'");
        Rat r = rat_from(val, where + "['" + key + "']");
        auto slot = canon.emplace(std::array<std::size_t, 3>{std::min(i, j), std::max(i, j), k}, r);
        if (!slot.second && slot.first->second != r)
            bad(where, "'" + key + "' conflicts with symmetry");
    }
    for (const auto& [pos, val] : canon) {
        table[pos[0] * lim + pos[1]][pos[2]] = val;
        table[pos[1] * lim + pos[0]][pos[2]] = val;
    }
}

void fill_alternating_ternary(const json& v, const std::string& where, std::size_t lim,
                              std::size_t lim_out, std::vector<RatVec>& table) {
    if (!v.is_object()) bad(where, "expected an object");
    std::map<std::array<std::size_t, 4>, Rat> canon;
    for (const auto& [key, val] : v.items()) {
        auto idx = key_indices(key, 3, where);
        std::size_t i = idx[0], j = idx[1], k = idx[2], m = idx[3];
        if (i >= lim || j >= lim || k >= lim || m >= lim_out)
            bad(where, "index out of range in '" + key + "'");
        Rat r = rat_from(val, where + "['" + key + "']");
        if (i == j || j == k || i == k) {
            if (r != 0) bad(where, "antisymmetry forces '" + key + "' to vanish");
            continue;
        }
        std::array<std::size_t, 3> s = {i, j, k};
        std::sort(s.begin(), s.end());
        Rat c = perm3_sign(i, j, k) == 1 ? r : Rat(-r);
        auto slot = canon.emplace(std::array<std::size_t, 4>{s[0], s[1], s[2], m}, c);
        if (!slot.second && slot.first->second != c)
            bad(where, "'" + key + "' conflicts with antisymmetry");
    }
    for (const auto& [pos, val] : canon) {
        std::size_t a = pos[0], b = pos[1], c = pos[2], m = pos[3];
        auto put = [&](std::size_t x, std::size_t y, std::size_t z, const Rat& r) {
            table[(x * lim + y) * lim + z][m] = r;
        };
        put(a, b, c, val);
        put(b, c, a, val);
        put(c, a, b, val);
        put(b, a, c, -val);
        put(a, c, b, -val);
        put(c, b, a, -val);
    }
}

std::array<std::size_t, 3> cyclic_rep(std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> best = {i, j, k};
    std::array<std::size_t, 3> r1 = {j, k, i};
    std::array<std::size_t, 3> r2 = {k, i, j};
    if (r1 < best) best = r1;
    if (r2 < best) best = r2;
    return best;
}

void fill_cyclic_ternary(const json& v, const std::string& where, std::size_t lim,
                         std::size_t lim_out, std::vector<RatVec>& table) {
    if (!v.is_object()) bad(where, "expected an object");
    std::map<std::array<std::size_t, 4>, Rat> canon;
    for (const auto& [key, val] : v.items()) {
        auto idx = key_indices(key, 3, where);
        std::size_t i = idx[0], j = idx[1], k = idx[2], m = idx[3];
        if (i >= lim || j >= lim || k >= lim || m >= lim_out)
            bad(where, "index out of range in '" + key + "'");
        Rat r = rat_from(val, where + "['" + key + "']");
        auto rep = cyclic_rep(i, j, k);
        auto slot = canon.emplace(std::array<std::size_t, 4>{rep[0], rep[1], rep[2], m}, r);
        if (!slot.second && slot.first->second != r)
            bad(where, "'" + key + "' conflicts with cyclic invariance");
    }
    for (const auto& [pos, val] : canon) {
        std::size_t a = pos[0], b = pos[1], c = pos[2], m = pos[3];
        table[(a * lim + b) * lim + c][m] = val;
        table[(b * lim + c) * lim + a][m] = val;
        table[(c * lim + a) * lim + b][m] = val;
    }
}

// Nonzero entries of a sparse block, keys in canonical order only.
template <typename Keep>
json sparse_json(std::size_t lim_a, std::size_t lim_b, std::size_t lim_out,
                 std::size_t stride, const std::vector<RatVec>& table, Keep keep) {
    json o = json::object();
    for (std::size_t i = 0; i < lim_a; ++i)
        for (std::size_t j = 0; j < lim_b; ++j) {
            if (!keep(i, j)) continue;
            const RatVec& val = table[i * stride + j];
            for (std::size_t k = 0; k < lim_out; ++k)
                if (val[k] != 0) o[make_key({i, j, k})] = num_json(val[k]);
        }
    return o;
}

} // namespace

L2Algebra l2_from(const json& v) {
    if (!v.is_object()) bad("l2", "expected a JSON object");
    reject_integer_ring(v, "l2");
    std::size_t n1 = index_from(require(v, "n1", "l2"), "l2.n1");
    std::size_t n0 = index_from(require(v, "n0", "l2"), "l2.n0");
    L2Algebra a = L2Algebra::zero(n1, n0);
    if (auto it = v.find("l1"); it != v.end()) {
        a.l1 = rat_matrix_from(*it, "l2.l1");
        if (a.l1.rows() != n0 || a.l1.cols() != n1)
            bad("l2.l1", "expected an n0 x n1 matrix");
    }
    if (auto it = v.find("l2_00"); it != v.end())
        fill_antisymmetric_block(*it, "l2.l2_00", n0, n0, a.l2_00);
    if (auto it = v.find("l2_0m"); it != v.end())
        fill_plain_block(*it, "l2.l2_0m", n0, n1, n1, n1, a.l2_0m);
    if (auto it = v.find("l3"); it != v.end())
        fill_alternating_ternary(*it, "l2.l3", n0, n1, a.l3);
    return a;
}

json l2_json(const L2Algebra& a) {
    json o = json::object();
    o["n1"] = a.n1;
    o["n0"] = a.n0;
    o["l1"] = num_json(a.l1);
    o["l2_00"] = sparse_json(a.n0, a.n0, a.n0, a.n0, a.l2_00,
                             [](std::size_t i, std::size_t j) { return i < j; });
    o["l2_0m"] = sparse_json(a.n0, a.n1, a.n1, a.n1, a.l2_0m,
                             [](std::size_t, std::size_t) { return true; });
    json l3 = json::object();
    for (std::size_t i = 0; i < a.n0; ++i)
        for (std::size_t j = i + 1; j < a.n0; ++j)
            for (std::size_t k = j + 1; k < a.n0; ++k) {
                const RatVec& val = a.l3_at(i, j, k);
                for (std::size_t m = 0; m < a.n1; ++m)
                    if (val[m] != 0) l3[make_key({i, j, k, m})] = num_json(val[m]);
            }
    o["l3"] = std::move(l3);
    return o;
}

PseudoL2Data pseudo_from(const json& v) {
    if (!v.is_object()) bad("pseudo", "expected a JSON object");
    reject_integer_ring(v, "pseudo");
    std::size_t n1 = index_from(require(v, "n1", "pseudo"), "pseudo.n1");
    std::size_t n0 = index_from(require(v, "n0", "pseudo"), "pseudo.n0");
    PseudoL2Data p = PseudoL2Data::zero(n1, n0);
    if (auto it = v.find("d"); it != v.end()) {
        p.d = rat_matrix_from(*it, "pseudo.d");
        if (p.d.rows() != n0 || p.d.cols() != n1)
            bad("pseudo.d", "expected an n0 x n1 matrix");
    }
    if (auto it = v.find("lt2_00"); it != v.end())
        fill_plain_block(*it, "pseudo.lt2_00", n0, n0, n0, n0, p.lt2_00);
    if (auto it = v.find("lt2_0m"); it != v.end())
        fill_plain_block(*it, "pseudo.lt2_0m", n0, n1, n1, n1, p.lt2_0m);
    if (auto it = v.find("lt2_m0"); it != v.end())
        fill_plain_block(*it, "pseudo.lt2_m0", n1, n0, n1, n0, p.lt2_m0);
    if (auto it = v.find("s"); it != v.end())
        fill_symmetric_block(*it, "pseudo.s", n0, n1, p.s);
    if (auto it = v.find("lt3"); it != v.end())
        fill_cyclic_ternary(*it, "pseudo.lt3", n0, n1, p.lt3);
    return p;
}

json pseudo_json(const PseudoL2Data& p) {
    json o = json::object();
    o["n1"] = p.n1;
    o["n0"] = p.n0;
    o["d"] = num_json(p.d);
    o["lt2_00"] = sparse_json(p.n0, p.n0, p.n0, p.n0, p.lt2_00,
                              [](std::size_t, std::size_t) { return true; });
    o["lt2_0m"] = sparse_json(p.n0, p.n1, p.n1, p.n1, p.lt2_0m,
                              [](std::size_t, std::size_t) { return true; });
    o["lt2_m0"] = sparse_json(p.n1, p.n0, p.n1, p.n0, p.lt2_m0,
                              [](std::size_t, std::size_t) { return true; });
    o["s"] = sparse_json(p.n0, p.n0, p.n1, p.n0, p.s,
                         [](std::size_t i, std::size_t j) { return i <= j; });
    json lt3 = json::object();
    for (std::size_t i = 0; i < p.n0; ++i)
        for (std::size_t j = 0; j < p.n0; ++j)
            for (std::size_t k = 0; k < p.n0; ++k) {
                if (cyclic_rep(i, j, k) != std::array<std::size_t, 3>{i, j, k}) continue;
                const RatVec& val = p.lt3_at(i, j, k);
                for (std::size_t m = 0; m < p.n1; ++m)
                    if (val[m] != 0) lt3[make_key({i, j, k, m})] = num_json(val[m]);
            }
    o["lt3"] = std::move(lt3);
    return o;
}

FinDimAlgebra algebra_from(const json& v, const std::string& where) {
    FinDimAlgebra a;
    a.dim = index_from(require(v, "dim", where), where + ".dim");
    const json& jm = require(v, "mult", where);
    if (!jm.is_array() || jm.size() != a.dim)
        bad(where + ".mult", "expected one row per basis element");
    a.mult.reserve(a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const json& row = jm[i];
        if (!row.is_array() || row.size() != a.dim)
            bad(at(where + ".mult", i), "expected one product per basis element");
        for (std::size_t j = 0; j < a.dim; ++j) {
            RatVec prod = rat_vec_from(row[j], at(where + ".mult", i, j));
            if (prod.size() != a.dim)
                bad(at(where + ".mult", i, j), "product vector has the wrong length");
            a.mult.push_back(std::move(prod));
        }
    }
    a.unit = rat_vec_from(require(v, "unit", where), where + ".unit");
    if (a.unit.size() != a.dim) bad(where + ".unit", "unit vector has the wrong length");
    return a;
}

json algebra_json(const FinDimAlgebra& a) {
    json o = json::object();
    o["dim"] = a.dim;
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim; ++j) row.push_back(num_json(a.mult_at(i, j)));
        mult.push_back(std::move(row));
    }
    o["mult"] = std::move(mult);
    o["unit"] = num_json(a.unit);
    return o;
}

FDModule module_from(const json& v, const std::string& where) {
    FDModule x;
    x.dim = index_from(require(v, "dim", where), where + ".dim");
    const json& ja = require(v, "action", where);
    if (!ja.is_array()) bad(where + ".action", "expected an array of matrices");
    x.action.reserve(ja.size());
    for (std::size_t i = 0; i < ja.size(); ++i) {
        RatMatrix m = rat_matrix_from(ja[i], at(where + ".action", i));
        if (m.rows() != x.dim || m.cols() != x.dim)
            bad(at(where + ".action", i), "expected a dim x dim matrix");
        x.action.push_back(std::move(m));
    }
    return x;
}

json module_json(const FDModule& x) {
    json o = json::object();
    o["dim"] = x.dim;
    json action = json::array();
    for (const RatMatrix& m : x.action) action.push_back(num_json(m));
    o["action"] = std::move(action);
    return o;
}

ExtensionSeq extension_from(const json& v, const std::string& where) {
    ExtensionSeq e;
    e.middle = module_from(require(v, "middle", where), where + ".middle");
    e.iota = rat_matrix_from(require(v, "iota", where), where + ".iota");
    e.pi = rat_matrix_from(require(v, "pi", where), where + ".pi");
    return e;
}

json extension_json(const ExtensionSeq& e) {
    json o = json::object();
    o["middle"] = module_json(e.middle);
    o["iota"] = num_json(e.iota);
    o["pi"] = num_json(e.pi);
    return o;
}

} // namespace cat2alg::jsondetail

namespace cat2alg {

namespace jd = jsondetail;

namespace {

std::string dumped(const jd::json& v) { return v.dump(2) + "\n"; }

} // namespace

Skeletal2Group parse_2group(const std::string& text) {
    return jd::group_from(jd::parse_text(text), "2-group");
}

std::string serialize_2group(const Skeletal2Group& g) { return dumped(jd::group_json(g)); }

TwoGroupHomFile parse_2group_hom(const std::string& text) {
    jd::json v = jd::parse_text(text);
    Skeletal2Group src = jd::group_from(jd::require(v, "source", "hom file"), "source");
    Skeletal2Group dst = jd::group_from(jd::require(v, "target", "hom file"), "target");
    Hom2G f = jd::hom_from(v, src, dst);
    return TwoGroupHomFile{std::move(src), std::move(dst), std::move(f)};
}

Complex2 parse_complex(const std::string& text) {
    return jd::complex_from(jd::parse_text(text), "complex");
}

std::string serialize_complex(const Complex2& k) { return dumped(jd::complex_json(k)); }

L2Algebra parse_l2(const std::string& text) { return jd::l2_from(jd::parse_text(text)); }

std::string serialize_l2(const L2Algebra& a) { return dumped(jd::l2_json(a)); }

PseudoL2Data parse_pseudo(const std::string& text) {
    return jd::pseudo_from(jd::parse_text(text));
}

std::string serialize_pseudo(const PseudoL2Data& p) { return dumped(jd::pseudo_json(p)); }

FinDimAlgebra parse_algebra(const std::string& text) {
    return jd::algebra_from(jd::parse_text(text), "algebra");
}

std::string serialize_algebra(const FinDimAlgebra& a) { return dumped(jd::algebra_json(a)); }

FDModule parse_fdmodule(const std::string& text) {
    return jd::module_from(jd::parse_text(text), "module");
}

std::string serialize_fdmodule(const FDModule& x) { return dumped(jd::module_json(x)); }

} // namespace cat2alg
