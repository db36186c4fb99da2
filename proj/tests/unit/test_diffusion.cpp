#include "generators.hpp"
#include "oracles.hpp"

#include "mcx/error.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/norms.hpp"
#include "mcx/toy_vanish.hpp"

#include <catch_amalgamated.hpp>

using namespace mcx;

namespace {

// Z/n acting on itself by rotation, points "p0".."p{n-1}".
ActionOnSet rotation(std::size_t n) {
    std::vector<Point> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
    std::vector<std::map<Point, Point>> images(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < n; ++i) images[g][points[i]] = points[(i + g) % n];
    return table_action(FiniteGroup::cyclic(n), points, images);
}

std::vector<Point> line_window(std::int64_t lo, std::int64_t hi) {
    std::vector<Point> out;
    for (auto x = lo; x <= hi; ++x) out.push_back(std::to_string(x));
    return out;
}

std::vector<Point> plane_window(std::int64_t r) {
    std::vector<Point> out;
    for (auto x = -r; x <= r; ++x)
        for (auto y = -r; y <= r; ++y) out.push_back(std::to_string(x) + "," + std::to_string(y));
    return out;
}

SparseFunction delta(const Point& x, Rational v = 1) { return {{x, v}}; }

}  // namespace

TEST_CASE("group models", "[groups]") {
    auto z2 = GroupModel::free_abelian(2);
    CHECK(z2.multiply({1, 2}, {3, -5}) == GroupModel::Element{4, -3});
    CHECK(z2.inverse({1, -2}) == GroupModel::Element{-1, 2});
    CHECK(z2.key({3, -4}) == "3,-4");
    CHECK(z2.parse("3,-4") == GroupModel::Element{3, -4});
    CHECK_THROWS_AS(z2.parse("3"), ReferenceError);
    auto s3 = GroupModel::finite(FiniteGroup::symmetric(3));
    for (const auto& g : s3.elements()) CHECK(s3.multiply(g, s3.inverse(g)) == s3.identity());
    CHECK(action_violations(rotation(5)).empty());
    CHECK(action_violations(translation_action(2, plane_window(2))).empty());
}

TEST_CASE("convolution", "[convolve]") {
    auto rot = rotation(6);
    testing::Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = testing::random_function(rng, rot.points, 4, 5);
        CHECK(convolve(dirac(rot.group, rot.group.identity()), f, rot) == f);
        auto g = convolve(uniform(rot.group.elements()), f, rot);
        for (const auto& x : rot.points) {
            auto it = g.find(x);
            Rational v = it == g.end() ? Rational(0) : it->second;
            CHECK(v == total(f) / 6);
        }
    }
    auto line = translation_action(1);
    for (std::int64_t n = 1; n <= 16; ++n) {
        auto g = convolve(box_measure(1, n), delta("0"), line);
        CHECK(g.size() == static_cast<std::size_t>(n));
        for (std::int64_t x = 0; x < n; ++x) CHECK(g.at(std::to_string(x)) == Rational(1, n));
    }
}

TEST_CASE("convolution agrees with direct summation", "[convolve][oracle]") {
    testing::Rng rng(2);
    auto plane = translation_action(2, plane_window(3));
    std::vector<GroupModel::Element> small;
    for (std::int64_t x = -2; x <= 2; ++x)
        for (std::int64_t y = -2; y <= 2; ++y) small.push_back({x, y});
    for (int trial = 0; trial < 50; ++trial) {
        auto mu = testing::random_measure(rng, small, 5);
        auto f = testing::random_function(rng, plane_window(1), 4, 4);
        std::vector<Point> scan = plane_window(4);
        auto direct = oracle::convolve_direct(mu, f, plane, scan);
        CHECK(convolve(mu, f, plane) == direct);
        CHECK(l1_norm(direct) <= l1_norm(f));
        CHECK(total(direct) == total(f));
    }
}

TEST_CASE("measure derivatives", "[derivative]") {
    auto z = GroupModel::free_abelian(1);
    auto mu = box_measure(1, 7);
    CHECK(measure_derivative(z, mu, {0}) == 0);
    for (std::int64_t n = 2; n <= 64; ++n) CHECK(measure_derivative(z, box_measure(1, n), {1}) == Rational(2, n));
    auto g = GroupModel::finite(FiniteGroup::symmetric(3));
    auto u = uniform(g.elements());
    for (const auto& phi : g.elements()) CHECK(measure_derivative(g, u, phi) == 0);

    testing::Rng rng(3);
    std::vector<GroupModel::Element> cand;
    for (std::int64_t x = -4; x <= 4; ++x) cand.push_back({x});
    for (int trial = 0; trial < 50; ++trial) {
        auto m = testing::random_measure(rng, cand, 6);
        for (std::int64_t p = -3; p <= 3; ++p) CHECK(measure_derivative(z, m, {p}) == oracle::derivative_z(m, {p}));
    }
}

TEST_CASE("Folner measures", "[folner]") {
    auto z = GroupModel::free_abelian(1);
    auto mu = folner_measure(z, {{1}, {-1}}, Rational(1, 10));
    CHECK(mu.size() >= 21);
    CHECK(derivative_norm(z, mu, {{1}, {-1}}) == Rational(2, static_cast<long>(mu.size())));
    CHECK(derivative_norm(z, mu, {{1}, {-1}}) < Rational(1, 10));

    auto z2 = GroupModel::free_abelian(2);
    auto mu2 = folner_measure(z2, {{1, 0}, {0, 1}}, Rational(1, 5));
    CHECK(derivative_norm(z2, mu2, {{1, 0}, {0, 1}}) < Rational(1, 5));
    require_probability(mu2);

    auto fin = GroupModel::finite(FiniteGroup::cyclic(5));
    auto u = folner_measure(fin, fin.elements(), Rational(1, 1000));
    CHECK(u.size() == 5);
    CHECK(derivative_norm(fin, u, fin.elements()) == 0);
    CHECK_THROWS_AS(folner_measure(z, {{1}}, 0), DomainError);
}

TEST_CASE("diffusion to epsilon", "[diffuse]") {
    SECTION("finite groups reach the total exactly") {
        auto rot = rotation(5);
        testing::Rng rng(4);
        for (int trial = 0; trial < 20; ++trial) {
            auto f = testing::random_function(rng, rot.points, 4, 5);
            auto r = diffuse_to_epsilon(rot, f, Rational(1, 100));
            CHECK(r.output_norm == abs(total(f)));
        }
    }
    SECTION("dipole on the integers") {
        auto line = translation_action(1);
        SparseFunction f{{"0", 1}, {"1", -1}};
        auto r = diffuse_to_epsilon(line, f, Rational(1, 10));
        CHECK(r.output_norm <= Rational(1, 10));
        CHECK(r.mu.size() >= 40);
    }
    SECTION("nonzero totals") {
        auto plane = translation_action(2);
        testing::Rng rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            auto f = testing::random_function(rng, plane_window(2), 4, 3);
            if (f.empty()) continue;
            Rational eps = Rational(1, 1 + trial);
            auto r = diffuse_to_epsilon(plane, f, eps);
            CHECK(r.output_norm >= abs(total(f)));
            CHECK(r.output_norm <= abs(total(f)) + eps);
        }
    }
    SECTION("zero input and rejections") {
        auto line = translation_action(1);
        CHECK(diffuse_to_epsilon(line, {}, Rational(1, 2)).f.empty());
        std::vector<std::map<Point, Point>> images(2);
        images[1] = {{"x", "y"}, {"y", "x"}};
        auto split = table_action(FiniteGroup::cyclic(2), {"x", "y", "w"}, images);
        CHECK_THROWS_AS(diffuse_to_epsilon(split, SparseFunction{{"x", 1}, {"w", -1}}, Rational(1, 2)), DomainError);
    }
}

TEST_CASE("diffusion inequality on random instances", "[diffuse][property]") {
    testing::Rng rng(6);
    auto rot = rotation(7);
    auto line = translation_action(1);
    for (int trial = 0; trial < 100; ++trial) {
        bool finite = trial % 2 == 0;
        const auto& a = finite ? rot : line;
        std::vector<Point> pts = finite ? rot.points : line_window(-5, 5);
        auto f = testing::random_function(rng, pts, 4, 4);
        if (f.empty()) continue;
        std::vector<GroupModel::Element> cand = finite ? rot.group.elements() : std::vector<GroupModel::Element>{};
        if (!finite)
            for (std::int64_t x = -10; x <= 10; ++x) cand.push_back({x});
        auto mu = testing::random_measure(rng, cand, 8);
        Point x0 = f.begin()->first;
        std::vector<GroupModel::Element> phi_inv;
        for (const auto& [x, v] : f) phi_inv.push_back(a.group.inverse(*find_transporter(a, x0, x)));
        Rational bound = abs(total(f)) + derivative_norm(a.group, mu, phi_inv) * l1_norm(f);
        CHECK(l1_norm(convolve(mu, f, a)) <= bound);
    }
}

TEST_CASE("the measure must depend on f", "[counterexample]") {
    auto line = translation_action(1);
    testing::Rng rng(7);
    std::vector<GroupModel::Element> cand;
    for (std::int64_t x = -20; x <= 20; ++x) cand.push_back({x});
    for (int trial = 0; trial < 10; ++trial) {
        auto mu = testing::random_measure(rng, cand, 12);
        SparseFunction f1{{"0", 1}, {"1", -1}};
        Rational base = l1_norm(convolve(mu, f1, line));
        CHECK(base > 0);
        CHECK(base == oracle::derivative_z(mu, {1}));
        for (int n : {2, 7, 100}) {
            SparseFunction fn{{"0", n}, {"1", -n}};
            CHECK(l1_norm(convolve(mu, fn, line)) == n * base);
        }
    }
}

TEST_CASE("locally finite actions", "[local]") {
    auto a = fixtures::ten_orbits();
    CHECK(validate_locally_finite(a).ok());

    SECTION("orbits are diffused independently") {
        SparseFunction f{{"0:0", 1}, {"0:3", -1}, {"1:0", 2}, {"1:2", -2}};
        std::vector<Rational> eps(10, Rational(1, 8));
        auto r = local_diffuse(a, f, eps, 0);
        auto lf0 = a.orbits[0].subgroup;
        auto alone = diffuse_to_epsilon(lf0, SparseFunction{{"0:0", 1}, {"0:3", -1}}, Rational(1, 8));
        SparseFunction orbit0;
        for (const auto& [x, v] : r.result)
            if (x.rfind("0:", 0) == 0) orbit0[x] = v;
        CHECK(orbit0 == alone.f);
        CHECK(r.norms_after[1] == 0);
    }
    SECTION("geometric schedule") {
        SparseFunction f;
        for (std::size_t s = 0; s < 10; ++s) {
            add_to(f, std::to_string(s) + ":0", 3);
            add_to(f, std::to_string(s) + ":1", s < 3 ? 1 : -3);
        }
        Rational eps = Rational(1, 3);
        std::vector<Rational> schedule;
        for (std::size_t s = 0; s < 10; ++s) schedule.push_back(eps / (1 << (s + 1)));
        const std::size_t s_bar = 3;
        auto r = local_diffuse(a, f, schedule, s_bar);
        Rational m = 0;
        for (std::size_t s = 0; s < s_bar; ++s) m += r.norms_after[s];
        CHECK(l1_norm(r.result) <= m + eps);
        for (std::size_t s = 0; s < 10; ++s) CHECK(r.sums_after[s] == r.sums_before[s]);
        for (std::size_t s = s_bar; s < 10; ++s) CHECK(r.norms_after[s] <= schedule[s]);
    }
    SECTION("finite orbit is cleared") {
        SparseFunction f{{"3:0", 1}, {"3:4", -1}};
        auto r = local_diffuse(a, f, std::vector<Rational>(10, Rational(1, 2)), 0);
        CHECK(r.result.empty());
    }
    SECTION("nonzero orbit sum is rejected") {
        SparseFunction f{{"5:0", 1}};
        CHECK_THROWS_AS(local_diffuse(a, f, std::vector<Rational>(10, Rational(1, 2)), 0), DomainError);
    }
}

TEST_CASE("toy vanishing", "[toy]") {
    SECTION("cone over the double edge") {
        auto mc = std::make_shared<const Multicomplex>(fixtures::cone_over_double_edge());
        Chain z(1);
        z.add({"e1", {"a", "b"}}, 1);
        z.add({"e2", {"a", "b"}}, -1);
        auto r = toy_vanish(fixtures::edge_swap(mc), z, Rational(1, 100));
        CHECK(r.diffused.is_zero());
        CHECK(r.certificate_verified);
        auto cc = build_full_chain_complex(*mc);
        CHECK(boundary(cc, r.bounding_chain) == r.diffused - z);
    }
    SECTION("double edge without the cone") {
        auto mc = std::make_shared<const Multicomplex>(fixtures::double_edge());
        Chain z(1);
        z.add({"e1", {"a", "b"}}, 1);
        z.add({"e2", {"a", "b"}}, -1);
        try {
            toy_vanish(fixtures::edge_swap(mc), z, Rational(1, 100));
            FAIL("expected a class-preservation error");
        } catch (const ToyVanishError& e) {
            CHECK(e.stage == "class-preservation");
            CHECK(e.element == "1");
            CHECK(e.negates_class);
        }
    }
    SECTION("zero cycle") {
        auto mc = std::make_shared<const Multicomplex>(fixtures::double_edge());
        auto r = toy_vanish(fixtures::edge_swap(mc), Chain(1), Rational(1, 100));
        CHECK(r.diffused.is_zero());
    }
}
