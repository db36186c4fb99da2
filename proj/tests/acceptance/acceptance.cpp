// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "generators.hpp"
#include "oracles.hpp"

#include "mcx/actions.hpp"
#include "mcx/chain_complex.hpp"
#include "mcx/constructions.hpp"
#include "mcx/covers.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/error.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/homology.hpp"
#include "mcx/norms.hpp"
#include "mcx/toy_vanish.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mcx;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (ok || !pass) {
            pass = pass && ok;
            return;
        }
        pass = false;
        first_failure = what;
    }
};

using Clock = std::chrono::steady_clock;

// Every seminorm computed in the suite is audited here for a zero duality gap.
struct GapLedger {
    std::size_t instances = 0;
    std::size_t failures = 0;
    void audit(const ChainComplex& cc, const Chain& z, const SeminormResult& r) {
        ++instances;
        if (!audit_seminorm(cc, z, r).ok()) ++failures;
    }
};
GapLedger gaps;

SeminormResult audited_seminorm(const ChainComplex& cc, const Chain& z) {
    SeminormResult r = seminorm_l1(cc, z);
    gaps.audit(cc, z, r);
    return r;
}

Chain edge_difference() {
    Chain z(1);
    z.add({"e1", {"a", "b"}}, 1);
    z.add({"e2", {"a", "b"}}, -1);
    return z;
}

std::shared_ptr<const Multicomplex> share(Multicomplex mc) { return std::make_shared<const Multicomplex>(std::move(mc)); }

// 1. d o d = 0 on random multicomplexes, for every chain complex built from them.
void chain_axiom(Outcome& o) {
    testing::Rng rng(101);
    std::size_t complexes = 0, matrices = 0, largest = 0;
    int top = 0;
    for (int trial = 0; trial < 500; ++trial) {
        testing::MulticomplexShape shape;
        shape.min_vertices = 3 + static_cast<std::size_t>(trial % 3);
        shape.max_vertices = 5 + static_cast<std::size_t>(trial % 3);
        shape.max_dim = 1 + trial % 4;
        shape.max_simplices = 200;
        shape.fill_chance = 0.9;
        auto mc = testing::random_multicomplex(rng, shape);
        o.require(validate(mc).ok() && mc.size() <= 200 && mc.dimension() <= 4, "generator left its bounds");
        const int dim = mc.dimension();
        top = std::max(top, dim);
        largest = std::max(largest, mc.size());
        for (const auto& cc : {build_reduced_chain_complex(mc), build_full_chain_complex(mc, dim, FullBasis::distinct),
                               build_full_chain_complex(mc, dim, FullBasis::covering)}) {
            for (int n = 2; n <= cc.top_degree(); ++n) {
                ++matrices;
                o.require(is_zero(multiply(cc.boundary_matrix(n - 1), cc.boundary_matrix(n))),
                          "d d != 0 in degree " + std::to_string(n) + " of " + cc.label());
            }
        }
        ++complexes;
    }
    o.detail << complexes << " complexes (up to " << largest << " simplices, dim " << top << "), " << matrices
             << " products d_{n-1} d_n";
}

// 2. Full and reduced seminorms agree on random cycles.
void isometry(Outcome& o) {
    testing::Rng rng(202);
    int checked = 0, attempts = 0;
    Rational largest = 0;
    while (checked < 100 && attempts < 5000) {
        ++attempts;
        testing::MulticomplexShape shape;
        shape.max_vertices = 5;
        shape.max_dim = 3;
        shape.max_simplices = 30;
        auto mc = testing::random_multicomplex(rng, shape);
        if (mc.dimension() < 1) continue;
        int n = 1 + attempts % mc.dimension();
        auto full = build_full_chain_complex(mc, n + 1, FullBasis::covering);
        if (full.rank(n + 1) > 400) continue;
        auto red = build_reduced_chain_complex(mc, n + 1);
        auto z = testing::random_cycle(rng, full, n);
        if (!z || z->is_zero()) continue;
        ++checked;
        auto rf = audited_seminorm(full, *z);
        auto rr = audited_seminorm(red, project(*z));
        o.require(rf.value == rr.value, "seminorms differ: full " + to_string(rf.value) + ", reduced " +
                                            to_string(rr.value) + " on a degree-" + std::to_string(n) + " cycle");
        // The section is the inverse isometry.
        auto rs = audited_seminorm(full, section(rr.representative));
        o.require(rs.value == rr.value, "section changed the seminorm");
        largest = std::max(largest, rf.value);
    }
    o.require(checked == 100, "only " + std::to_string(checked) + " cycles generated");
    o.detail << checked << " cycles, largest seminorm " << to_string(largest);
}

// 3. The degenerate but nonzero class of the noisog Delta-complex.
void noisog(Outcome& o) {
    auto fx = fixtures::noisog();
    auto reduced = integral_seminorm_bruteforce(fx.reduced, fx.sigma, 3, 4);
    auto full = integral_seminorm_bruteforce(fx.full, fx.full_cycle, 3, 3);
    o.require(reduced.known_value() && *reduced.known_value() == 1, "reduced value is not 1");
    o.require(full.known_value() && *full.known_value() >= 2, "full value is not at least 2");
    o.require(fixtures::noisog_project(full.representative) == fx.sigma, "full representative does not project to sigma");
    o.detail << "reduced " << (reduced.known_value() ? to_string(*reduced.known_value()) : "unknown") << ", full "
             << (full.known_value() ? to_string(*full.known_value()) : "unknown")
             << (full.globally_optimal ? " (globally optimal)" : "") << ", coefficient bound 3";
}

// 4. Zero duality gap; the circle has seminorm 3 with a +-1 certificate.
void duality(Outcome& o) {
    auto tri = fixtures::boundary_triangle();
    Chain z(1);
    z.add({"a,b", {"a", "b"}}, 1);
    z.add({"b,c", {"b", "c"}}, 1);
    z.add({"a,c", {"a", "c"}}, -1);
    for (const auto& cc : {build_reduced_chain_complex(tri, 2), build_full_chain_complex(tri, 2, FullBasis::covering)}) {
        auto r = audited_seminorm(cc, z);
        o.require(r.value == 3, "circle value " + to_string(r.value) + " in " + cc.label());
        for (const auto& [s, q] : z.terms())
            o.require(abs(r.certificate.coefficient(s)) == 1, "certificate is not +-1 on " + to_string(s));
        o.require(linf_norm(r.certificate, cc.basis(1)) == 1, "certificate sup norm is not 1");
    }
    testing::Rng rng(404);
    for (const auto& mc : {special_sphere(2), fixtures::torus7(), fixtures::cone_over_double_edge()}) {
        auto red = build_reduced_chain_complex(mc, mc.dimension() + 1);
        for (int n = 1; n <= mc.dimension(); ++n)
            for (int k = 0; k < 5; ++k)
                if (auto c = testing::random_cycle(rng, red, n)) audited_seminorm(red, *c);
    }
    o.require(gaps.failures == 0, std::to_string(gaps.failures) + " audits failed");
    o.detail << gaps.instances << " seminorm instances audited, " << gaps.failures << " with a gap; circle = 3";
}

// 5. Quotients by 0-trivial actions.
void quotients(Outcome& o) {
    auto s1 = share(fixtures::double_edge());
    auto q = quotient(fixtures::edge_swap(s1));
    o.require(validate(q.complex).ok() && q.complex.count(0) == 2 && q.complex.count(1) == 1 &&
                  q.complex.dimension() == 1 && is_simplicial_complex(q.complex),
              "edge-swap quotient is not a segment");
    bool rejected = false;
    try {
        quotient(fixtures::antipodal(s1));
    } catch (const DomainError&) {
        rejected = true;
    }
    o.require(rejected, "antipodal action was not rejected");

    std::vector<GroupAction> actions{fixtures::edge_swap(s1), fixtures::edge_swap(share(fixtures::cone_over_double_edge()))};
    testing::Rng rng(505);
    while (actions.size() < 20) {
        testing::MulticomplexShape shape;
        shape.max_vertices = 4;
        shape.max_dim = 2;
        shape.max_simplices = 20;
        actions.push_back(oracle::copies_action(testing::random_multicomplex(rng, shape), 2 + actions.size() % 2));
    }
    std::size_t degrees = 0;
    for (const auto& a : actions) {
        o.require(validate_action(a).ok(), "fixture action is invalid");
        auto qa = quotient(a);
        auto betti = homology(build_reduced_chain_complex(qa.complex), Ring::rationals).betti();
        for (int n = 0; n <= std::min(2, qa.complex.dimension()); ++n) {
            ++degrees;
            auto expected = oracle::invariant_cohomology_dim(a, n);
            o.require(betti[static_cast<std::size_t>(n)] == expected,
                      "degree " + std::to_string(n) + ": quotient betti " +
                          std::to_string(betti[static_cast<std::size_t>(n)]) + ", invariant cochains " +
                          std::to_string(expected));
        }
    }
    o.detail << "segment ok, antipodal rejected, " << actions.size() << " fixtures / " << degrees << " degrees match";
}

ActionOnSet rotation(std::size_t n) {
    std::vector<Point> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
    std::vector<std::map<Point, Point>> images(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t i = 0; i < n; ++i) images[g][points[i]] = points[(i + g) % n];
    return table_action(FiniteGroup::cyclic(n), points, images);
}

ActionOnSet left_multiplication(const FiniteGroup& g) {
    std::vector<Point> points;
    for (std::size_t e = 0; e < g.order(); ++e) points.push_back(g.name(e));
    std::vector<std::map<Point, Point>> images(g.order());
    for (std::size_t e = 0; e < g.order(); ++e)
        for (std::size_t x = 0; x < g.order(); ++x) images[e][g.name(x)] = g.name(g.multiply(e, x));
    return table_action(g, points, images);
}

std::vector<Point> box_points(std::size_t rank, std::int64_t side) {
    std::vector<Point> out;
    for (std::int64_t x = 0; x < side; ++x) {
        if (rank == 1) {
            out.push_back(std::to_string(x));
            continue;
        }
        for (std::int64_t y = 0; y < side; ++y) out.push_back(std::to_string(x) + "," + std::to_string(y));
    }
    return out;
}

std::vector<GroupModel::Element> box_elements(std::size_t rank, std::int64_t side) {
    std::vector<GroupModel::Element> out;
    for (std::int64_t x = -side / 2; x < side - side / 2; ++x) {
        if (rank == 1) {
            out.push_back({x});
            continue;
        }
        for (std::int64_t y = -side / 2; y < side - side / 2; ++y) out.push_back({x, y});
    }
    return out;
}

struct Instance {
    ActionOnSet action;
    std::vector<Point> points;
    std::vector<GroupModel::Element> candidates;
};

// Diffusion on Z^2 needs a box of side about 2 |Phi| ||f||_1 / eps, so
// `small_plane` keeps the plane instances close to the origin.
Instance random_instance(testing::Rng& rng, int trial, bool small_plane = false) {
    switch (trial % 4) {
        case 0: {
            auto a = rotation(2 + static_cast<std::size_t>(trial % 11));
            return {a, a.points, a.group.elements()};
        }
        case 1: {
            FiniteGroup g = trial % 8 == 1 ? FiniteGroup::symmetric(3)
                                           : FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
            auto a = left_multiplication(g);
            return {a, a.points, a.group.elements()};
        }
        default: {
            std::size_t rank = trial % 4 == 2 ? 1 : 2;
            std::int64_t side = std::uniform_int_distribution<std::int64_t>(2, rank == 1 ? 64 : 16)(rng);
            if (small_plane && rank == 2) side = std::min<std::int64_t>(side, 3);
            return {translation_action(rank), box_points(rank, side), box_elements(rank, side)};
        }
    }
}

// 6. ||mu * f||_1 <= |sum f| + ||D_{Phi^-1} mu||_1 ||f||_1.
void diffusion_inequality(Outcome& o) {
    testing::Rng rng(606);
    int instances = 0, tight = 0;
    for (int trial = 0; instances < 1000; ++trial) {
        auto inst = random_instance(rng, trial);
        auto f = testing::random_function(rng, inst.points, 6, 5);
        if (f.empty()) continue;
        auto mu = testing::random_measure(rng, inst.candidates, 8);
        const auto& a = inst.action;
        Point x0 = f.begin()->first;
        std::vector<GroupModel::Element> phi_inv;
        for (const auto& [x, v] : f) {
            auto g = find_transporter(a, x0, x);
            o.require(g.has_value(), "no transporter to " + x);
            if (!g) return;
            o.require(a.act(*g, x0) == x, "transporter does not carry x0 to " + x);
            phi_inv.push_back(a.group.inverse(*g));
        }
        std::vector<Point> scan;
        for (const auto& [g, w] : mu)
            for (const auto& [y, v] : f) scan.push_back(a.act(g, y));
        auto direct = oracle::convolve_direct(mu, f, a, scan);
        o.require(direct == convolve(mu, f, a), "convolution disagrees with direct summation");
        Rational bound = abs(total(f)) + derivative_norm(a.group, mu, phi_inv) * l1_norm(f);
        o.require(l1_norm(direct) <= bound, "inequality fails on instance " + std::to_string(instances));
        if (l1_norm(direct) == bound) ++tight;
        ++instances;
    }
    o.detail << instances << " instances (finite, Z, Z^2), " << tight << " tight";
}

// 7. Folner boxes and certified diffusion.
void folner(Outcome& o) {
    auto z = GroupModel::free_abelian(1);
    for (std::int64_t n = 2; n <= 64; ++n) {
        auto mu = box_measure(1, n);
        o.require(measure_derivative(z, mu, {1}) == Rational(2, n), "box of size " + std::to_string(n));
        o.require(oracle::derivative_z(mu, {1}) == Rational(2, n), "oracle disagrees on box " + std::to_string(n));
    }
    testing::Rng rng(707);
    int instances = 0;
    for (int trial = 0; instances < 200; ++trial) {
        auto inst = random_instance(rng, trial, true);
        const bool plane = !inst.action.group.is_finite() && inst.action.group.rank() == 2;
        auto f = testing::random_function(rng, inst.points, plane ? 2 : 4, plane ? 2 : 4);
        if (f.empty()) continue;
        Rational eps(1, std::uniform_int_distribution<int>(1, plane ? 4 : 40)(rng));
        auto r = diffuse_to_epsilon(inst.action, f, eps);
        require_probability(r.mu);
        o.require(r.output_norm == l1_norm(convolve(r.mu, f, inst.action)), "reported norm differs from mu * f");
        o.require(r.output_norm <= abs(total(f)) + eps, "diffusion missed epsilon on instance " + std::to_string(instances));
        ++instances;
    }
    o.detail << "2/N for N = 2..64, " << instances << " certified diffusions";
}

// 8. On Z the measure has to depend on f: ||mu * f_n|| = n ||mu * f_1||.
void counterexample(Outcome& o) {
    auto line = translation_action(1);
    testing::Rng rng(808);
    std::vector<GroupModel::Element> cand;
    for (std::int64_t x = -20; x <= 20; ++x) cand.push_back({x});
    for (int m = 0; m < 50; ++m) {
        auto mu = testing::random_measure(rng, cand, 12);
        SparseFunction f1{{"0", 1}, {"1", -1}};
        Rational base = l1_norm(convolve(mu, f1, line));
        o.require(base > 0, "||mu * f_1|| = 0");
        o.require(base == oracle::derivative_z(mu, {1}), "||mu * f_1|| differs from sum |mu(x) - mu(x-1)|");
        for (int n = 1; n <= 100; ++n) {
            SparseFunction fn{{"0", n}, {"1", -n}};
            o.require(l1_norm(convolve(mu, fn, line)) == n * base, "scaling fails at n = " + std::to_string(n));
        }
    }
    o.detail << "50 measures, n = 1..100";
}

// 9. Orbit-by-orbit diffusion on ten orbits.
void local_diffusion(Outcome& o) {
    auto a = fixtures::ten_orbits();
    o.require(validate_locally_finite(a).ok(), "ten-orbit action is invalid");
    testing::Rng rng(909);
    int runs = 0;
    for (std::size_t s_bar = 0; s_bar <= 10; ++s_bar) {
        for (int k = 0; k < 3; ++k) {
            SparseFunction f;
            std::vector<Rational> eps;
            for (std::size_t s = 0; s < 10; ++s) {
                auto part = testing::random_function(rng, a.orbits[s].points, 4, 4);
                if (s >= s_bar && !part.empty()) add_to(part, a.orbits[s].points.front(), -total(part));
                for (const auto& [x, v] : part) add_to(f, x, v);
                eps.push_back(Rational(1, std::uniform_int_distribution<int>(1, 64)(rng)));
            }
            auto r = local_diffuse(a, f, eps, s_bar);
            std::vector<Rational> before(10), after(10), norm_after(10);
            for (const auto& [x, v] : f) before[*a.orbit_of(x)] += v;
            for (const auto& [x, v] : r.result) {
                auto s = *a.orbit_of(x);
                after[s] += v;
                norm_after[s] += abs(v);
            }
            for (std::size_t s = 0; s < 10; ++s) {
                o.require(before[s] == after[s], "orbit " + std::to_string(s) + " sum changed");
                o.require(norm_after[s] == r.norms_after[s], "reported orbit norm is wrong");
                if (s >= s_bar) o.require(norm_after[s] <= eps[s], "orbit " + std::to_string(s) + " missed eps_s");
            }
            ++runs;
        }
    }
    o.detail << runs << " runs, s_bar = 0..10";
}

// 10. Toy vanishing on the cone and rejection on the bare double edge.
void toy(Outcome& o) {
    auto cone = share(fixtures::cone_over_double_edge());
    auto z = edge_difference();
    auto r = toy_vanish(fixtures::edge_swap(cone), z, Rational(1, 100));
    auto cc = build_full_chain_complex(*cone, 2, FullBasis::covering);
    o.require(l1_norm(r.diffused) == 0, "||c'||_1 = " + to_string(l1_norm(r.diffused)));
    o.require(r.certificate_verified, "certificate not verified by the library");
    o.require(boundary(cc, r.bounding_chain) == r.diffused - z, "dB != c' - z");

    auto bare = share(fixtures::double_edge());
    auto swap = fixtures::edge_swap(bare);
    bool rejected = false;
    try {
        toy_vanish(swap, z, Rational(1, 100));
    } catch (const ToyVanishError& e) {
        rejected = e.stage == "class-preservation" && e.element == "1" && e.negates_class;
    }
    o.require(rejected, "double edge was not rejected at class preservation with [g.z] = -[z]");
    auto h = homology(build_full_chain_complex(*bare, 2, FullBasis::covering), Ring::rationals);
    Chain gz = act_on_chain(swap, 1, z);
    o.require(h.is_boundary(gz + z) && !h.is_boundary(z), "[g.z] = -[z] does not hold independently");
    o.detail << "cone: ||c'||_1 = 0, dB = c' - z; double edge rejected with [g.z] = -[z]";
}

// 11. mult = 1 + dim N and the repeated-color vanishing.
void nerves(Outcome& o) {
    testing::Rng rng(1111);
    std::vector<std::string> points;
    for (int i = 0; i < 10; ++i) points.push_back("p" + std::to_string(i));
    for (int trial = 0; trial < 200; ++trial) {
        auto c = testing::random_cover(rng, points, 2 + static_cast<std::size_t>(trial % 6));
        std::size_t deepest = 0;
        for (const auto& p : points) {
            std::size_t k = 0;
            for (const auto& s : c.sets) k += s.count(p);
            deepest = std::max(deepest, k);
        }
        auto n = nerve(c);
        o.require(multiplicity(c) == static_cast<std::size_t>(1 + n.dimension()), "mult != 1 + dim N");
        o.require(multiplicity(c) == deepest, "mult differs from the point-count oracle");
    }
    std::size_t checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto a = testing::random_swap_action(rng, 3, 4);
        Coloring coloring;
        for (const auto& v : a.complex().vertices()) coloring[v] = (v == "x" || v == "y") ? "xy" : v;
        std::map<std::string, ColorWitness> witnesses;
        const auto& mc = a.complex();
        for (SimplexIndex s = 0; s < mc.size(); ++s) {
            auto names = mc.vertex_names(s);
            if (std::count(names.begin(), names.end(), "x") && std::count(names.begin(), names.end(), "y"))
                witnesses[mc.id(s)] = {"1", "x", "y"};
        }
        for (int d = 1; d <= mc.dimension(); ++d) {
            auto phi = average_cochain(a, testing::random_alternating_cochain(rng, mc, d, 3));
            auto report = check_repeated_color_vanishing(phi, a, coloring, witnesses);
            o.require(report.ok(), "vanishing check reported a failure");
            for (const auto& e : report.checked) {
                o.require(e.value == 0, "nonzero value on " + to_string(e.simplex));
                ++checked;
            }
        }
    }
    o.detail << "200 covers; " << checked << " witnessed simplices all 0";
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "chain-complex axiom", 60, chain_axiom},
        {2, "isometric reduction", 300, isometry},
        {3, "noisog integral seminorm", 60, noisog},
        {4, "LP duality", 0, duality},
        {5, "quotient correctness", 0, quotients},
        {6, "diffusion inequality", 120, diffusion_inequality},
        {7, "Folner bound", 0, folner},
        {8, "Z counterexample", 0, counterexample},
        {9, "local diffusion", 0, local_diffusion},
        {10, "toy vanishing", 0, toy},
        {11, "nerve identity", 0, nerves},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0) {
            std::ostringstream limit;
            limit << "time " << seconds << " s over the " << c.limit_seconds << " s limit";
            o.require(seconds < c.limit_seconds, limit.str());
        }
        if (!o.pass) ++failed;
        std::printf("%s %2d %-26s %s%s%s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(),
                    o.pass ? "" : " :: ", o.first_failure.c_str(), seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
