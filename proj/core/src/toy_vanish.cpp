#include "mcx/toy_vanish.hpp"

#include "mcx/chain_complex.hpp"
#include "mcx/homology.hpp"
#include "mcx/norms.hpp"

#include <algorithm>
#include <memory>

namespace mcx {

Measure convolve_measures(const GroupModel& g, const Measure& mu, const Measure& nu) {
    Measure out;
    for (const auto& [a, x] : mu)
        for (const auto& [b, y] : nu) out[g.multiply(a, b)] += x * y;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

bool odd_reordering(const AlgebraicSimplex& s, const AlgebraicSimplex& t) {
    if (s.simplex != t.simplex) return false;
    std::vector<std::string> a = s.vertices, b = t.vertices;
    int sa = sort_sign(a), sb = sort_sign(b);
    return sa != 0 && a == b && sa != sb;
}

Chain restrict_to(const Chain& c, const std::vector<AlgebraicSimplex>& orbit) {
    Chain out(c.degree(), c.ring());
    for (const auto& s : orbit) out.add(s, c.coefficient(s));
    return out;
}

}  // namespace

ToyVanishResult toy_vanish(const GroupAction& a, const Chain& z, const Rational& eps) {
    if (eps <= 0) throw DomainError("epsilon must be positive");
    if (z.ring() != Ring::rationals) throw DomainError("toy vanishing works with rational cycles");
    const Multicomplex& mc = a.complex();
    const auto& group = a.group();
    const int n = z.degree();
    ChainComplex cc = build_full_chain_complex(mc, std::max(n + 1, 0), FullBasis::covering);
    HomologyResult h = homology(cc, Ring::rationals, n);
    if (!h.is_cycle(z)) throw DomainError("chain is not a cycle");

    ToyVanishResult r;
    r.alternated = alternate(z);
    Chain alt_minus_z = r.alternated - z;
    auto b_alt = h.bounding_chain(alt_minus_z);
    if (!b_alt) throw InvariantError("alternation changed the homology class");

    // Odd reorderings, with the per-orbit sum condition as the fallback.
    for (const auto& [s, q] : r.alternated.terms()) {
        bool found = false;
        for (FiniteGroup::Element g = 0; g < group.order() && !found; ++g) found = odd_reordering(s, a.act(g, s));
        if (!found) r.without_odd_reordering.push_back(s);
    }
    std::vector<AlgebraicSimplex> support;
    for (const auto& [s, q] : r.alternated.terms()) support.push_back(s);
    r.orbits = orbits_of(a, support).orbits;
    if (!r.without_odd_reordering.empty()) {
        for (const auto& orbit : r.orbits) {
            Rational sum = 0;
            for (const auto& s : orbit) sum += r.alternated.coefficient(s);
            if (sum != 0)
                throw ToyVanishError("odd-reordering", "no element reorders " + to_string(orbit.front()) +
                                                           " by an odd permutation and its orbit sum is " +
                                                           to_string(sum));
        }
    }

    // Class preservation for every element.
    for (FiniteGroup::Element g = 0; g < group.order(); ++g) {
        Chain gz = act_on_chain(a, g, z);
        if (!h.are_homologous(gz, z)) {
            bool negates = h.is_boundary(gz + z);
            throw ToyVanishError("class-preservation",
                                 "element '" + group.name(g) + "' does not preserve the class of z" +
                                     (negates ? ": [g.z] = -[z]" : ""),
                                 group.name(g), negates);
        }
    }

    // Orbit-by-orbit diffusion; orbits come sorted by their least member.
    GroupModel model = GroupModel::finite(group);
    r.combined = dirac(model, model.identity());
    r.eta = r.orbits.empty() ? eps : eps / Rational(static_cast<long>(r.orbits.size()));
    Chain current = r.alternated;
    for (const auto& orbit : r.orbits) {
        auto members = std::make_shared<std::map<std::string, AlgebraicSimplex>>();
        for (const auto& s : orbit) members->emplace(to_string(s), s);
        ActionOnSet on_orbit;
        on_orbit.group = model;
        for (const auto& [key, s] : *members) on_orbit.points.push_back(key);
        on_orbit.act = [&a, members](const GroupModel::Element& e, const Point& x) {
            return to_string(a.act(static_cast<FiniteGroup::Element>(e.at(0)), members->at(x)));
        };
        SparseFunction f;
        for (const auto& s : orbit) add_to(f, to_string(s), current.coefficient(s));
        Measure mu = diffuse_to_epsilon(on_orbit, f, r.eta).mu;
        Chain next(n, Ring::rationals);
        for (const auto& [e, w] : mu) next += w * act_on_chain(a, static_cast<FiniteGroup::Element>(e.at(0)), current);
        current = next;
        if (l1_norm(restrict_to(current, orbit)) > r.eta) throw InvariantError("orbit diffusion missed its budget");
        r.combined = convolve_measures(model, mu, r.combined);
        r.measures.push_back(std::move(mu));
    }
    r.diffused = current;

    Chain check(n, Ring::rationals);
    for (const auto& [e, w] : r.combined)
        check += w * act_on_chain(a, static_cast<FiniteGroup::Element>(e.at(0)), r.alternated);
    if (!(check == r.diffused)) throw InvariantError("combined measure disagrees with the sequential diffusion");
    if (l1_norm(r.diffused) > eps) throw InvariantError("diffused chain exceeds epsilon");

    // B = b_alt + sum_g nu(g) b_g with d b_g = g.alt(z) - alt(z).
    Chain bound = *b_alt;
    for (const auto& [e, w] : r.combined) {
        Chain gz = act_on_chain(a, static_cast<FiniteGroup::Element>(e.at(0)), r.alternated);
        auto bg = h.bounding_chain(gz - r.alternated);
        if (!bg) throw InvariantError("class-preserving element without a bounding chain");
        bound += w * *bg;
    }
    r.bounding_chain = bound;
    Chain lhs = n + 1 <= cc.top_degree() ? boundary(cc, bound) : Chain(n, Ring::rationals);
    r.certificate_verified = lhs == r.diffused - z;
    if (!r.certificate_verified) throw InvariantError("bounding chain certificate failed the boundary check");
    return r;
}

}  // namespace mcx
