#include "mcx/fixtures.hpp"

#include "mcx/constructions.hpp"
#include "mcx/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace mcx::fixtures {

Multicomplex boundary_triangle() { return simplicial_complex_from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

Multicomplex boundary_tetrahedron() {
    return simplicial_complex_from_facets({{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

Multicomplex torus7() {
    std::vector<std::vector<std::string>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
        facets.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
    }
    return simplicial_complex_from_facets(facets);
}

Multicomplex double_edge() {
    MulticomplexBuilder b;
    b.vertex("a").vertex("b").simplex("e1", {"a", "b"}).simplex("e2", {"a", "b"});
    return b.build();
}

Multicomplex cone_over_double_edge() {
    MulticomplexBuilder b;
    b.vertex("a").vertex("b").vertex("p");
    b.simplex("e1", {"a", "b"}).simplex("e2", {"a", "b"});
    b.simplex("a,p", {"a", "p"}).simplex("b,p", {"b", "p"});
    b.simplex("t1", {"e1", "a,p", "b,p"}).simplex("t2", {"e2", "a,p", "b,p"});
    return b.build();
}

Multicomplex broken_composition() {
    MulticomplexBuilder b;
    for (const auto& v : {"a", "b", "c", "d"}) b.vertex(v);
    b.simplex("ab", {"a", "b"}).simplex("ab'", {"a", "b"});
    b.simplex("ac", {"a", "c"}).simplex("ad", {"a", "d"}).simplex("bc", {"b", "c"}).simplex("bd", {"b", "d"});
    b.simplex("cd", {"c", "d"});
    b.simplex("abc", {"bc", "ac", "ab"}).simplex("abd", {"bd", "ad", "ab'"});
    b.simplex("acd", {"cd", "ad", "ac"}).simplex("bcd", {"cd", "bd", "bc"});
    b.simplex("abcd", {"bcd", "acd", "abd", "abc"});
    return b.build();
}

Multicomplex hexagon() {
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < 6; ++i) edges.push_back({"h" + std::to_string(i), "h" + std::to_string((i + 1) % 6)});
    return simplicial_complex_from_facets(edges);
}

Cover three_arc_cover() {
    Cover c;
    c.indices = {"A", "B", "C"};
    c.sets = {{"h0", "h1", "h2"}, {"h2", "h3", "h4"}, {"h4", "h5", "h0"}};
    c.amenable = {true, true, true};
    return c;
}

GroupAction edge_swap(std::shared_ptr<const Multicomplex> mc) {
    SimplicialMap swap = identity_map(*mc);
    swap.simplex_map["e1"] = "e2";
    swap.simplex_map["e2"] = "e1";
    if (mc->find("t1")) {
        swap.simplex_map["t1"] = "t2";
        swap.simplex_map["t2"] = "t1";
    }
    return GroupAction(mc, FiniteGroup::cyclic(2), {identity_map(*mc), swap});
}

GroupAction antipodal(std::shared_ptr<const Multicomplex> mc) {
    SimplicialMap flip;
    flip.vertex_map = {{"a", "b"}, {"b", "a"}};
    flip.simplex_map = {{"a", "b"}, {"b", "a"}, {"e1", "e2"}, {"e2", "e1"}};
    return GroupAction(mc, FiniteGroup::cyclic(2), {identity_map(*mc), flip});
}

namespace {

std::optional<std::pair<std::size_t, std::int64_t>> split_point(const Point& x) {
    auto colon = x.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == x.size()) return std::nullopt;
    try {
        std::size_t used = 0;
        auto s = std::stoull(x.substr(0, colon), &used);
        if (used != colon) return std::nullopt;
        auto n = std::stoll(x.substr(colon + 1), &used);
        if (used != x.size() - colon - 1) return std::nullopt;
        return std::pair{static_cast<std::size_t>(s), static_cast<std::int64_t>(n)};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Point make_point(std::size_t s, std::int64_t n) { return std::to_string(s) + ":" + std::to_string(n); }

}  // namespace

LocallyFiniteAction orbit_family(const std::vector<OrbitSpec>& specs) {
    LocallyFiniteAction out;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const auto& spec = specs[s];
        if (spec.size == 0) throw DomainError("orbit " + std::to_string(s) + " needs a positive size");
        LocalOrbit orbit;
        for (std::size_t n = 0; n < spec.size; ++n) orbit.points.push_back(make_point(s, static_cast<std::int64_t>(n)));
        orbit.horizon = s + 1;
        if (spec.kind == "Z") {
            orbit.subgroup.group = GroupModel::free_abelian(1);
            orbit.subgroup.act = [s](const GroupModel::Element& e, const Point& x) {
                auto p = split_point(x);
                if (!p || p->first != s) return x;
                return make_point(s, p->second + e.at(0));
            };
            orbit.subgroup.transporter = [s](const Point& from, const Point& to) -> std::optional<GroupModel::Element> {
                auto a = split_point(from), b = split_point(to);
                if (!a || !b || a->first != s || b->first != s) return std::nullopt;
                return GroupModel::Element{b->second - a->second};
            };
        } else if (spec.kind == "cyclic") {
            const auto m = static_cast<std::int64_t>(spec.size);
            orbit.subgroup.group = GroupModel::finite(FiniteGroup::cyclic(spec.size));
            orbit.subgroup.act = [s, m](const GroupModel::Element& e, const Point& x) {
                auto p = split_point(x);
                if (!p || p->first != s) return x;
                return make_point(s, (((p->second + e.at(0)) % m) + m) % m);
            };
        } else {
            throw ReferenceError("unknown orbit kind '" + spec.kind + "' (expected Z or cyclic)");
        }
        orbit.subgroup.points = orbit.points;
        out.orbits.push_back(std::move(orbit));
    }
    const std::vector<OrbitSpec> kinds = specs;
    out.orbit_of = [kinds](const Point& x) -> std::optional<std::size_t> {
        auto p = split_point(x);
        if (!p || p->first >= kinds.size()) return std::nullopt;
        const auto& spec = kinds[p->first];
        if (spec.kind == "cyclic" && (p->second < 0 || p->second >= static_cast<std::int64_t>(spec.size)))
            return std::nullopt;
        return p->first;
    };
    return out;
}

LocallyFiniteAction ten_orbits() {
    std::vector<OrbitSpec> specs;
    for (std::size_t s = 0; s < 10; ++s) specs.push_back(s % 2 == 0 ? OrbitSpec{"Z", 6} : OrbitSpec{"cyclic", s + 2});
    return orbit_family(specs);
}

namespace {

struct Cell {
    std::string name;
    std::vector<int> corners;
    // Omitted corner -> (face cell, corner relabelling).
    std::map<int, std::pair<std::string, std::map<int, int>>> faces;
};

const std::vector<Cell>& noisog_cells() {
    static const std::vector<Cell> cells = {
        {"P", {0}, {}},
        {"a", {0, 1}, {{0, {"P", {{1, 0}}}}, {1, {"P", {{0, 0}}}}}},
        {"b", {0, 2}, {{0, {"P", {{2, 0}}}}, {2, {"P", {{0, 0}}}}}},
        {"T1",
         {0, 2, 3},
         {{0, {"a", {{2, 0}, {3, 1}}}}, {2, {"a", {{3, 0}, {0, 1}}}}, {3, {"b", {{0, 0}, {2, 2}}}}}},
        {"T2",
         {0, 1, 2},
         {{0, {"a", {{1, 0}, {2, 1}}}}, {1, {"b", {{0, 0}, {2, 2}}}}, {2, {"a", {{0, 0}, {1, 1}}}}}},
        {"D",
         {0, 1, 2, 3},
         {{0, {"T1", {{1, 2}, {2, 3}, {3, 0}}}},
          {1, {"T1", {{0, 0}, {2, 2}, {3, 3}}}},
          {2, {"T2", {{0, 1}, {1, 2}, {3, 0}}}},
          {3, {"T2", {{0, 0}, {1, 1}, {2, 2}}}}}},
    };
    return cells;
}

const Cell& cell(const std::string& name) {
    for (const auto& c : noisog_cells())
        if (c.name == name) return c;
    throw InvariantError("unknown noisog cell " + name);
}

std::string corner(int i) { return "v" + std::to_string(i); }
int corner_index(const std::string& s) { return std::stoi(s.substr(1)); }

// Tuples of length n+1 over the corners of `c` that use every corner.
void covering_tuples(const Cell& c, std::size_t length, std::vector<AlgebraicSimplex>& out) {
    std::vector<std::size_t> digits(length, 0);
    const std::size_t k = c.corners.size();
    if (length < k) return;
    while (true) {
        std::vector<bool> used(k, false);
        for (auto d : digits) used[d] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
            AlgebraicSimplex s{c.name, {}};
            for (auto d : digits) s.vertices.push_back(corner(c.corners[d]));
            out.push_back(std::move(s));
        }
        std::size_t i = length;
        while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
        if (i == 0) break;
    }
}

// Faces with signs of a generator, in the full complex.
std::vector<std::pair<AlgebraicSimplex, int>> faces_of(const AlgebraicSimplex& s) {
    const Cell& c = cell(s.simplex);
    std::vector<std::pair<AlgebraicSimplex, int>> out;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        std::vector<std::string> rest = s.vertices;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        int sign = i % 2 == 0 ? 1 : -1;
        std::vector<int> missing;
        for (int k : c.corners)
            if (std::find(rest.begin(), rest.end(), corner(k)) == rest.end()) missing.push_back(k);
        if (missing.empty()) {
            out.push_back({{c.name, rest}, sign});
            continue;
        }
        const auto& [face, relabel] = c.faces.at(missing.front());
        AlgebraicSimplex f{face, {}};
        for (const auto& v : rest) f.vertices.push_back(corner(relabel.at(corner_index(v))));
        out.push_back({f, sign});
    }
    return out;
}

ChainComplex assemble(std::vector<std::vector<AlgebraicSimplex>> bases, bool reduced, bool truncated,
                      const std::string& label) {
    for (auto& b : bases) std::sort(b.begin(), b.end());
    std::vector<SparseIntMatrix> boundaries;
    boundaries.emplace_back(0, bases[0].size());
    for (std::size_t n = 1; n < bases.size(); ++n) {
        std::map<AlgebraicSimplex, std::size_t> index;
        for (std::size_t i = 0; i < bases[n - 1].size(); ++i) index[bases[n - 1][i]] = i;
        SparseIntMatrix d(bases[n - 1].size(), bases[n].size());
        for (std::size_t j = 0; j < bases[n].size(); ++j) {
            std::map<std::size_t, std::int64_t> col;
            for (auto [f, sign] : faces_of(bases[n][j])) {
                if (reduced) {
                    sign *= sort_sign(f.vertices);
                    if (sign == 0) continue;
                }
                col[index.at(f)] += sign;
            }
            for (const auto& [r, v] : col)
                if (v != 0) d.columns[j].emplace_back(r, v);
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(label, std::move(bases), std::move(boundaries), truncated);
}

}  // namespace

Chain noisog_project(const Chain& c) {
    Chain out(c.degree(), c.ring());
    for (const auto& [s, q] : c.terms()) {
        if (static_cast<std::size_t>(c.degree()) + 1 != cell(s.simplex).corners.size()) continue;
        AlgebraicSimplex t = s;
        int sign = sort_sign(t.vertices);
        if (sign != 0) out.add(t, sign * q);
    }
    return out;
}

NoisogFixture noisog() {
    const int top = 4;
    std::vector<std::vector<AlgebraicSimplex>> full(top + 1), reduced(4);
    for (const auto& c : noisog_cells()) {
        for (int n = 0; n <= top; ++n) covering_tuples(c, static_cast<std::size_t>(n) + 1, full[static_cast<std::size_t>(n)]);
        AlgebraicSimplex canonical{c.name, {}};
        for (int k : c.corners) canonical.vertices.push_back(corner(k));
        reduced[c.corners.size() - 1].push_back(canonical);
    }
    NoisogFixture fx{assemble(std::move(full), false, true, "noisog-full"),
                     assemble(std::move(reduced), true, false, "noisog-reduced"), Chain(3, Ring::integers),
                     Chain(3, Ring::integers)};
    fx.sigma.add({"D", {"v0", "v1", "v2", "v3"}}, 1);
    fx.full_cycle.add({"D", {"v0", "v2", "v3", "v1"}}, 1);
    fx.full_cycle.add({"D", {"v0", "v3", "v2", "v1"}}, 1);
    fx.full_cycle.add({"D", {"v3", "v0", "v1", "v2"}}, -1);
    if (!boundary(fx.full, fx.full_cycle).is_zero() || !(noisog_project(fx.full_cycle) == fx.sigma))
        throw InvariantError("noisog representative is not a cycle over sigma");
    return fx;
}

}  // namespace mcx::fixtures
