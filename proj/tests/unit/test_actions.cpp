#include "generators.hpp"
#include "oracles.hpp"

#include "mcx/actions.hpp"
#include "mcx/chain_complex.hpp"
#include "mcx/constructions.hpp"
#include "mcx/error.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/homology.hpp"
#include "mcx/norms.hpp"

#include <catch_amalgamated.hpp>

using namespace mcx;

namespace {

std::shared_ptr<const Multicomplex> share(Multicomplex mc) { return std::make_shared<const Multicomplex>(std::move(mc)); }

// S_3 permuting the corners a, b, c of the simplicial circle.
GroupAction symmetric_triangle() {
    auto mc = share(fixtures::boundary_triangle());
    auto s3 = FiniteGroup::symmetric(3);
    const std::vector<std::string> v = {"a", "b", "c"};
    std::vector<SimplicialMap> maps;
    for (std::size_t g = 0; g < s3.order(); ++g) {
        auto images = split_subset_key(s3.name(g));
        SimplicialMap f;
        auto img = [&](const std::string& x) {
            auto i = static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
            return v[static_cast<std::size_t>(std::stoi(std::string(images[i])))];
        };
        for (const auto& x : v) {
            f.vertex_map[x] = img(x);
            f.simplex_map[x] = img(x);
        }
        for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"a", "c"}}) {
            std::vector<std::string> e = {img(x), img(y)};
            std::sort(e.begin(), e.end());
            f.simplex_map[x + "," + y] = e[0] + "," + e[1];
        }
        maps.push_back(f);
    }
    return GroupAction(mc, s3, maps);
}

Chain term(const std::string& id, std::vector<std::string> vs, Rational q) {
    Chain c(static_cast<int>(vs.size()) - 1);
    c.add({id, std::move(vs)}, q);
    return c;
}

}  // namespace

TEST_CASE("action validation", "[validate]") {
    auto s1 = share(fixtures::double_edge());
    CHECK(validate_action(GroupAction::trivial(s1, FiniteGroup::trivial())).ok());
    CHECK(validate_action(fixtures::edge_swap(s1)).ok());
    CHECK(validate_action(fixtures::antipodal(s1)).ok());
    CHECK(validate_action(symmetric_triangle()).ok());

    FiniteGroup broken({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 0}, {2, 2, 1}});
    CHECK_FALSE(broken.is_group());
    CHECK(validate_action(GroupAction::trivial(s1, broken)).has("group"));

    // Swapping the edges while claiming the trivial group breaks the homomorphism law.
    auto swap = fixtures::edge_swap(s1).map(1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto not_hom = GroupAction(s1, z2, {swap, swap});
    CHECK(validate_action(not_hom).has("homomorphism"));

    SimplicialMap collapse = identity_map(*s1);
    collapse.simplex_map["e2"] = "e1";
    CHECK(validate_action(GroupAction(s1, z2, {identity_map(*s1), collapse})).has("automorphism"));

    SimplicialMap missing = identity_map(*s1);
    missing.simplex_map.erase("e1");
    CHECK_THROWS_AS(GroupAction(s1, z2, {identity_map(*s1), missing}), ReferenceError);
    SimplicialMap unknown = identity_map(*s1);
    unknown.simplex_map["e1"] = "nowhere";
    CHECK_THROWS_AS(GroupAction(s1, z2, {identity_map(*s1), unknown}), ReferenceError);
}

TEST_CASE("0-triviality and quotients", "[quotient]") {
    auto s1 = share(fixtures::double_edge());
    auto swap = fixtures::edge_swap(s1);
    CHECK(is_zero_trivial(swap));
    CHECK_FALSE(is_zero_trivial(fixtures::antipodal(s1)));
    CHECK(is_zero_trivial(GroupAction::trivial(s1, FiniteGroup::cyclic(3))));

    auto q = quotient(swap);
    CHECK(q.complex.vertices().size() == 2);
    CHECK(q.complex.count(1) == 1);
    CHECK(q.complex.find("e1"));
    auto r = validate_simplicial_map(q.projection, *s1, q.complex);
    CHECK(r.ok());
    CHECK(r.surjective);
    CHECK(r.non_degenerate);

    auto same = quotient(GroupAction::trivial(s1, FiniteGroup::cyclic(2)));
    CHECK(same.complex.to_raw() == s1->to_raw());

    CHECK_THROWS_AS(quotient(fixtures::antipodal(s1)), DomainError);
}

TEST_CASE("orbits", "[orbits]") {
    auto s1 = share(fixtures::double_edge());
    auto trivial = orbits(GroupAction::trivial(s1, FiniteGroup::trivial()), 1);
    CHECK(trivial.orbits.size() == 4);
    for (const auto& o : trivial.orbits) CHECK(o.size() == 1);

    auto swapped = orbits(fixtures::edge_swap(s1), 1);
    REQUIRE(swapped.orbits.size() == 2);
    for (const auto& o : swapped.orbits) {
        REQUIRE(o.size() == 2);
        CHECK(o[0].vertices == o[1].vertices);
        CHECK(o[0].simplex != o[1].simplex);
    }

    auto full = orbits(symmetric_triangle(), 1);
    CHECK(full.orbits.size() == 1);
    CHECK(full.orbits[0].size() == 6);
}

TEST_CASE("action on chains", "[chains]") {
    auto s1 = share(fixtures::double_edge());
    auto swap = fixtures::edge_swap(s1);
    Chain c = term("e1", {"a", "b"}, 1) - term("e2", {"a", "b"}, 1);
    CHECK(act_on_chain(swap, 0, c) == c);
    CHECK(act_on_chain(swap, 1, c) == Rational(-1) * c);

    auto a = symmetric_triangle();
    auto cc = build_full_chain_complex(a.complex());
    testing::Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = testing::random_chain(rng, cc, 1, 5, 3);
        for (std::size_t g = 0; g < a.group().order(); ++g)
            CHECK(boundary(cc, act_on_chain(a, g, x)) == act_on_chain(a, g, boundary(cc, x)));
    }
}

TEST_CASE("averaging", "[average]") {
    auto s1 = share(fixtures::double_edge());
    auto swap = fixtures::edge_swap(s1);
    Cochain indicator(1);
    indicator.add({"e1", {"a", "b"}}, 1);
    auto avg = average_cochain(swap, indicator);
    CHECK(avg.coefficient({"e1", {"a", "b"}}) == Rational(1, 2));
    CHECK(avg.coefficient({"e2", {"a", "b"}}) == Rational(1, 2));
    CHECK(avg.support_size() == 2);
    CHECK(is_invariant(swap, avg));
    CHECK(average_cochain(swap, avg) == avg);

    auto a = symmetric_triangle();
    auto cc = build_full_chain_complex(a.complex());
    testing::Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = testing::random_chain(rng, cc, 0, 3, 4);
        Cochain phi(0);
        for (const auto& [s, q] : x.terms()) phi.add(s, q);
        auto ap = average_cochain(a, phi);
        CHECK(is_invariant(a, ap));
        CHECK(linf_norm(ap, cc.basis(0)) <= linf_norm(phi, cc.basis(0)));
        CHECK(average_cochain(a, ap) == ap);
        CHECK(coboundary(cc, ap) == average_cochain(a, coboundary(cc, phi)));
    }
}

TEST_CASE("quotient homology matches invariant cohomology", "[quotient][property]") {
    testing::Rng rng(9);
    auto check = [](const GroupAction& a) {
        REQUIRE(validate_action(a).ok());
        auto q = quotient(a);
        REQUIRE(validate(q.complex).ok());
        auto betti = homology(build_reduced_chain_complex(q.complex), Ring::rationals).betti();
        for (int n = 0; n <= std::min(2, q.complex.dimension()); ++n)
            CHECK(betti[static_cast<std::size_t>(n)] == oracle::invariant_cohomology_dim(a, n));
    };
    check(fixtures::edge_swap(share(fixtures::double_edge())));
    check(fixtures::edge_swap(share(fixtures::cone_over_double_edge())));
    for (int trial = 0; trial < 8; ++trial) {
        auto k = testing::random_multicomplex(rng, {.max_vertices = 4, .max_dim = 2, .max_simplices = 20});
        check(oracle::copies_action(k, 2 + static_cast<std::size_t>(trial % 2)));
    }
}
