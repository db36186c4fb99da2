#include "generators.hpp"

#include "mcx/actions.hpp"
#include "mcx/constructions.hpp"
#include "mcx/covers.hpp"
#include "mcx/error.hpp"
#include "mcx/fixtures.hpp"

#include <catch_amalgamated.hpp>

using namespace mcx;

namespace {

Cover make_cover(std::vector<std::pair<std::string, std::set<std::string>>> members) {
    Cover c;
    for (auto& [i, s] : members) {
        c.indices.push_back(i);
        c.sets.push_back(std::move(s));
        c.amenable.push_back(false);
    }
    return c;
}

std::map<std::string, ColorWitness> swap_witnesses(const GroupAction& a) {
    std::map<std::string, ColorWitness> out;
    const auto& mc = a.complex();
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        auto names = mc.vertex_names(s);
        bool x = std::find(names.begin(), names.end(), "x") != names.end();
        bool y = std::find(names.begin(), names.end(), "y") != names.end();
        if (x && y) out[mc.id(s)] = {"1", "x", "y"};
    }
    return out;
}

}  // namespace

TEST_CASE("nerves", "[nerve]") {
    auto one = nerve(make_cover({{"U", {"a", "b", "c"}}}));
    CHECK(one.vertices() == std::vector<std::string>{"U"});
    CHECK(one.size() == 1);

    auto arcs = nerve(fixtures::three_arc_cover());
    CHECK(arcs.vertices().size() == 3);
    CHECK(arcs.count(1) == 3);
    CHECK(arcs.count(2) == 0);
    CHECK(validate(arcs).ok());

    auto nested = nerve(make_cover({{"U1", {"a"}}, {"U2", {"a", "b"}}}));
    CHECK(nested.count(1) == 1);

    auto truncated = nerve(make_cover({{"A", {"p"}}, {"B", {"p"}}, {"C", {"p"}}}), 1);
    CHECK(truncated.dimension() == 1);
    CHECK(truncated.count(1) == 3);
}

TEST_CASE("multiplicity", "[mult]") {
    CHECK(multiplicity(make_cover({{"A", {"a"}}, {"B", {"b"}}, {"C", {"c"}}})) == 1);
    CHECK(multiplicity(fixtures::three_arc_cover()) == 2);
    testing::Rng rng(12);
    std::vector<std::string> points;
    for (int i = 0; i < 8; ++i) points.push_back("p" + std::to_string(i));
    for (int trial = 0; trial < 100; ++trial) {
        auto c = testing::random_cover(rng, points, 2 + static_cast<std::size_t>(trial % 5));
        auto n = nerve(c);
        CHECK(multiplicity(c) == static_cast<std::size_t>(1 + n.dimension()));
        // Shrinking a member never adds nerve simplices.
        Cover smaller = c;
        if (smaller.sets[0].size() > 1) smaller.sets[0].erase(smaller.sets[0].begin());
        auto m = nerve(smaller);
        for (const auto& s : m.simplices()) CHECK(n.find(s.id));
    }
}

TEST_CASE("adapted colorings", "[coloring]") {
    auto hexagon = fixtures::hexagon();
    std::vector<std::pair<std::string, std::set<std::string>>> stars;
    for (const auto& v : hexagon.vertices()) {
        std::set<std::string> star{v};
        for (const auto& s : hexagon.simplices())
            for (auto w : s.vertices)
                if (hexagon.vertex_name(w) == v)
                    for (auto u : s.vertices) star.insert(hexagon.vertex_name(u));
        stars.emplace_back("star(" + v + ")", star);
    }
    auto by_stars = coloring_adapted(hexagon, make_cover(stars));
    for (const auto& v : hexagon.vertices()) CHECK(by_stars.at(v) == "star(" + v + ")");

    auto tri = fixtures::boundary_triangle();

    auto all = coloring_adapted(tri, make_cover({{"0", {"a", "b", "c"}}}));
    for (const auto& v : tri.vertices()) CHECK(all.at(v) == "0");

    auto hex = fixtures::hexagon();
    try {
        coloring_adapted(hex, fixtures::three_arc_cover());
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("vertex 'h") != std::string::npos);
    }
}

TEST_CASE("repeated colors force vanishing", "[vanish]") {
    auto mc = std::make_shared<const Multicomplex>(simplicial_complex_from_facets({{"a", "b"}, {"b", "c"}}));
    SimplicialMap tau;
    tau.vertex_map = {{"a", "c"}, {"b", "b"}, {"c", "a"}};
    tau.simplex_map = {{"a", "c"}, {"b", "b"}, {"c", "a"}, {"a,b", "b,c"}, {"b,c", "a,b"}};
    GroupAction reflect(mc, FiniteGroup::cyclic(2), {identity_map(*mc), tau});
    Coloring coloring{{"a", "0"}, {"b", "1"}, {"c", "2"}};
    Cochain phi(1);
    phi.add({"a,b", {"a", "b"}}, 1);
    phi.add({"a,b", {"b", "a"}}, -1);
    phi.add({"b,c", {"c", "b"}}, 1);
    phi.add({"b,c", {"b", "c"}}, -1);
    auto distinct = check_repeated_color_vanishing(phi, reflect, coloring, {});
    CHECK(distinct.unconstrained.size() == 2);
    CHECK(distinct.checked.empty());
    CHECK(distinct.ok());

    testing::Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testing::random_swap_action(rng, 3, 4);
        REQUIRE(validate_action(a).ok());
        Coloring c;
        for (const auto& v : a.complex().vertices()) c[v] = (v == "x" || v == "y") ? "xy" : v;
        for (int n = 1; n <= a.complex().dimension(); ++n) {
            auto phi_n = average_cochain(a, testing::random_alternating_cochain(rng, a.complex(), n, 3));
            auto report = check_repeated_color_vanishing(phi_n, a, c, swap_witnesses(a));
            CHECK(report.ok());
            for (const auto& e : report.checked) CHECK(e.value == 0);
        }
    }
}

TEST_CASE("vanishing check surfaces failures and bad witnesses", "[vanish]") {
    auto mc = std::make_shared<const Multicomplex>(simplicial_complex_from_facets({{"x", "y"}}));
    SimplicialMap tau{{{"x", "y"}, {"y", "x"}}, {{"x", "y"}, {"y", "x"}, {"x,y", "x,y"}}};
    GroupAction flip(mc, FiniteGroup::cyclic(2), {identity_map(*mc), tau});
    Coloring same{{"x", "U"}, {"y", "U"}};
    Cochain phi(1);
    phi.add({"x,y", {"x", "y"}}, 1);
    phi.add({"x,y", {"y", "x"}}, -1);
    auto report = check_repeated_color_vanishing(phi, flip, same, {{"x,y", {"1", "x", "y"}}});
    CHECK_FALSE(report.ok());
    bool mentions = false;
    for (const auto& f : report.failures) mentions = mentions || f.find("x,y(") != std::string::npos;
    CHECK(mentions);

    CHECK(check_repeated_color_vanishing(Cochain(1), flip, same, {{"x,y", {"1", "x", "y"}}}).ok());
    CHECK_THROWS_AS(check_repeated_color_vanishing(Cochain(1), flip, same, {{"x,y", {"0", "x", "y"}}}), DomainError);
    CHECK(check_repeated_color_vanishing(Cochain(1), flip, same, {}).unwitnessed == std::vector<std::string>{"x,y"});
}
