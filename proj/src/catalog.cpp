#include "alglab/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alglab {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

Signature group_signature() {
    return Signature({{"mul", 2}, {"inv", 1}, {"1", 0}}, "1");
}

Signature loop_signature() {
    return Signature({{"mul", 2}, {"ldiv", 2}, {"rdiv", 2}, {"1", 0}}, "1");
}

// Group from a multiplication rule on indices; unit must be index 0.
// The inverse table is solved from the multiplication.
AlgebraPtr group_from(std::string name, std::vector<std::string> names,
                      const std::function<int(int, int)>& mul) {
    int n = static_cast<int>(names.size());
    std::vector<int> mt(static_cast<size_t>(n) * n), it(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = mul(i, j);
            mt[static_cast<size_t>(i) * n + j] = p;
            if (p == 0) it[static_cast<size_t>(i)] = j;
        }
    for (int i = 0; i < n; ++i)
        if (it[static_cast<size_t>(i)] < 0) throw ValidationError(name + ": element without inverse");
    return make_algebra(std::move(name), group_signature(), std::move(names), 0,
                        {std::move(mt), std::move(it), {0}}, GroupOps{0, 1});
}

AlgebraPtr cyclic(const std::string& name, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return group_from(name, std::move(names), [n](int a, int b) { return (a + b) % n; });
}

AlgebraPtr klein4() {
    return group_from("klein4", {"e", "a", "b", "c"}, [](int a, int b) { return a ^ b; });
}

AlgebraPtr z2cube() {
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i) {
        std::string s(3, '0');
        for (int b = 0; b < 3; ++b)
            if (i & (1 << (2 - b))) s[static_cast<size_t>(b)] = '1';
        names.push_back(std::move(s));
    }
    return group_from("z2cube", std::move(names), [](int a, int b) { return a ^ b; });
}

// Permutations compose left to right: (p*q)(x) = q(p(x)).
AlgebraPtr s3() {
    const std::array<std::array<int, 3>, 6> perm = {{
        {0, 1, 2},  // e
        {1, 0, 2},  // (12)
        {2, 1, 0},  // (13)
        {0, 2, 1},  // (23)
        {1, 2, 0},  // (123)
        {2, 0, 1},  // (132)
    }};
    auto mul = [&perm](int a, int b) {
        std::array<int, 3> c;
        for (int x = 0; x < 3; ++x) c[static_cast<size_t>(x)] = perm[static_cast<size_t>(b)][static_cast<size_t>(perm[static_cast<size_t>(a)][static_cast<size_t>(x)])];
        for (int i = 0; i < 6; ++i)
            if (perm[static_cast<size_t>(i)] == c) return i;
        throw ValidationError("s3: composite escapes the table");
    };
    return group_from("s3", {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, mul);
}

// Elements r^a s^b encoded as a + 4b; s r = r^-1 s.
AlgebraPtr d4() {
    auto mul = [](int x, int y) {
        int a = x & 3, b = x >> 2, c = y & 3, d = y >> 2;
        int e = (a + (b ? (4 - c) & 3 : c)) & 3;
        return e + 4 * ((b + d) & 1);
    };
    return group_from("d4", {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, mul);
}

// Elements (axis, sign) encoded as 2*axis + (sign < 0), axes 1, i, j, k.
AlgebraPtr q8() {
    // axis products with their signs: ij = k, ji = -k, etc.
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    auto mul = [](int x, int y) {
        int a = x >> 1, b = y >> 1;
        int sign = ((x & 1) ? -1 : 1) * ((y & 1) ? -1 : 1) * sg[a][b];
        return 2 * ax[a][b] + (sign < 0 ? 1 : 0);
    };
    return group_from("q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, mul);
}

// The bundled nonassociative order-5 loop.  Rows are the left factor; the
// divisions are solved from the Latin square.
AlgebraPtr l5() {
    const int n = 5;
    static const int m[5][5] = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 4, 0, 1, 3},
        {3, 2, 4, 0, 1},
        {4, 3, 1, 2, 0},
    };
    std::vector<int> mt(25), ld(25, -1), rd(25, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mt[static_cast<size_t>(a) * n + b] = m[a][b];
    for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z) {
            ld[static_cast<size_t>(a) * n + m[a][z]] = z;  // a\(a z) = z
            rd[static_cast<size_t>(m[z][a]) * n + a] = z;  // (z a)/a = z
        }
    for (int i = 0; i < 25; ++i)
        if (ld[static_cast<size_t>(i)] < 0 || rd[static_cast<size_t>(i)] < 0)
            throw ValidationError("l5: table is not a Latin square");
    return make_algebra("l5", loop_signature(), {"1", "a", "b", "c", "d"}, 0,
                        {std::move(mt), std::move(ld), std::move(rd), {0}});
}

Term tv(int i) { return Term::variable(i); }
Term tmul(Term a, Term b) { return Term::apply("mul", {std::move(a), std::move(b)}); }
Term tinv(Term a) { return Term::apply("inv", {std::move(a)}); }
Term tunit() { return Term::apply("1"); }
Term tcomm(Term a, Term b) {
    Term ai = tinv(a), bi = tinv(b);
    return tmul(tmul(tmul(std::move(a), std::move(b)), std::move(ai)), std::move(bi));
}

std::map<std::string, VarietySpec> build_varieties() {
    std::map<std::string, VarietySpec> out;
    {
        VarietySpec ab;
        ab.name = "ab";
        ab.identities = {{tmul(tv(0), tv(1)), tmul(tv(1), tv(0))}};
        ab.word_scheme = {tcomm(tv(0), tv(1))};
        out["ab"] = std::move(ab);
    }
    {
        VarietySpec triv;
        triv.name = "triv";
        triv.identities = {{tv(0), tunit()}};
        out["triv"] = std::move(triv);
    }
    {
        VarietySpec nil2;
        nil2.name = "nil2";
        nil2.identities = {{tcomm(tcomm(tv(0), tv(1)), tv(2)), tunit()}};
        out["nil2"] = std::move(nil2);
    }
    {
        VarietySpec gp;
        gp.name = "gp-in-loops";
        Term lassoc = tmul(tmul(tv(0), tv(1)), tv(2));
        Term rassoc = tmul(tv(0), tmul(tv(1), tv(2)));
        gp.identities = {{lassoc, rassoc}};
        gp.word_scheme = {Term::apply("rdiv", {lassoc, rassoc})};
        out["gp-in-loops"] = std::move(gp);
    }
    return out;
}

const std::map<std::string, AlgebraPtr>& algebra_table() {
    static const std::map<std::string, AlgebraPtr> table = [] {
        std::map<std::string, AlgebraPtr> t;
        t["z2"] = cyclic("z2", 2);
        t["z4"] = cyclic("z4", 4);
        t["z6"] = cyclic("z6", 6);
        t["z12"] = cyclic("z12", 12);
        t["klein4"] = klein4();
        t["z2cube"] = z2cube();
        t["s3"] = s3();
        t["d4"] = d4();
        t["q8"] = q8();
        t["l5"] = l5();
        return t;
    }();
    return table;
}

const std::map<std::string, VarietySpec>& variety_table() {
    static const std::map<std::string, VarietySpec> table = build_varieties();
    return table;
}

}  // namespace

AlgebraPtr catalog_algebra(const std::string& name) {
    const auto& t = algebra_table();
    auto it = t.find(lower(name));
    if (it == t.end()) throw ValidationError("unknown catalog algebra '" + name + "'");
    return it->second;
}

VarietySpec catalog_variety(const std::string& name) {
    const auto& t = variety_table();
    auto it = t.find(lower(name));
    if (it == t.end()) throw ValidationError("unknown catalog variety '" + name + "'");
    return it->second;
}

bool is_catalog_algebra(const std::string& name) { return algebra_table().count(lower(name)) > 0; }
bool is_catalog_variety(const std::string& name) { return variety_table().count(lower(name)) > 0; }

const std::vector<std::string>& catalog_algebra_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : algebra_table()) out.push_back(k);
        return out;
    }();
    return names;
}

const std::vector<std::string>& catalog_variety_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : variety_table()) out.push_back(k);
        return out;
    }();
    return names;
}

}  // namespace alglab
