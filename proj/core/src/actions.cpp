#include "mcx/actions.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcx {

GroupAction::GroupAction(std::shared_ptr<const Multicomplex> complex, FiniteGroup group,
                         std::vector<SimplicialMap> maps)
    : complex_(std::move(complex)), group_(std::move(group)), maps_(std::move(maps)) {
    if (!complex_) throw ReferenceError("group action without a multicomplex");
    if (maps_.size() != group_.order())
        throw ReferenceError("group action needs one map per group element (" + std::to_string(group_.order()) +
                             "), got " + std::to_string(maps_.size()));
    const Multicomplex& mc = *complex_;
    for (const auto& f : maps_) {
        std::vector<VertexIndex> vi(mc.vertices().size());
        std::vector<SimplexIndex> si(mc.size());
        for (VertexIndex v = 0; v < vi.size(); ++v) {
            auto it = f.vertex_map.find(mc.vertex_name(v));
            if (it == f.vertex_map.end()) throw ReferenceError("action map misses vertex '" + mc.vertex_name(v) + "'");
            vi[v] = mc.vertex_index(it->second);
        }
        for (SimplexIndex s = 0; s < si.size(); ++s) {
            auto it = f.simplex_map.find(mc.id(s));
            if (it == f.simplex_map.end()) throw ReferenceError("action map misses simplex '" + mc.id(s) + "'");
            si[s] = mc.index_of(it->second);
        }
        for (const auto& [k, v] : f.vertex_map) mc.vertex_index(k);
        for (const auto& [k, v] : f.simplex_map) mc.index_of(k);
        vertex_image_.push_back(std::move(vi));
        simplex_image_.push_back(std::move(si));
    }
}

GroupAction GroupAction::trivial(std::shared_ptr<const Multicomplex> complex, FiniteGroup group) {
    std::vector<SimplicialMap> maps(group.order(), identity_map(*complex));
    return GroupAction(std::move(complex), std::move(group), std::move(maps));
}

AlgebraicSimplex GroupAction::act(FiniteGroup::Element g, const AlgebraicSimplex& s) const {
    const Multicomplex& mc = *complex_;
    AlgebraicSimplex out{mc.id(simplex_image_[g][mc.index_of(s.simplex)]), {}};
    for (const auto& v : s.vertices) out.vertices.push_back(mc.vertex_name(vertex_image_[g][mc.vertex_index(v)]));
    return out;
}

ValidationReport validate_action(const GroupAction& a) {
    ValidationReport report;
    for (const auto& v : a.group().violations()) report.add("group", {}, v);
    if (!report.ok()) return report;
    const Multicomplex& mc = a.complex();
    const auto& g = a.group();
    for (FiniteGroup::Element e = 0; e < g.order(); ++e) {
        MapReport mr = validate_simplicial_map(a.map(e), mc, mc);
        for (const auto& v : mr.report.violations)
            report.add("automorphism", v.subjects, "element '" + g.name(e) + "': " + v.message);
        if (mr.ok() && !(mr.injective && mr.surjective))
            report.add("automorphism", {g.name(e)}, "element '" + g.name(e) + "' does not act bijectively");
    }
    for (FiniteGroup::Element x = 0; x < g.order(); ++x)
        for (FiniteGroup::Element y = 0; y < g.order(); ++y) {
            FiniteGroup::Element xy = g.multiply(x, y);
            bool ok = true;
            for (VertexIndex v = 0; v < mc.vertices().size() && ok; ++v)
                ok = a.act_vertex(xy, v) == a.act_vertex(x, a.act_vertex(y, v));
            for (SimplexIndex s = 0; s < mc.size() && ok; ++s)
                ok = a.act_simplex(xy, s) == a.act_simplex(x, a.act_simplex(y, s));
            if (!ok)
                report.add("homomorphism", {g.name(x), g.name(y)},
                           "rho(" + g.name(x) + "*" + g.name(y) + ") differs from rho(" + g.name(x) + ") o rho(" +
                               g.name(y) + ")");
        }
    return report;
}

bool is_zero_trivial(const GroupAction& a) {
    for (FiniteGroup::Element g = 0; g < a.group().order(); ++g)
        for (VertexIndex v = 0; v < a.complex().vertices().size(); ++v)
            if (a.act_vertex(g, v) != v) return false;
    return true;
}

Quotient quotient(const GroupAction& a) {
    if (!is_zero_trivial(a))
        throw DomainError("quotient needs a 0-trivial action: an element moves a vertex, and an identified edge "
                          "would have equal endpoints, which no multicomplex allows");
    const Multicomplex& mc = a.complex();
    std::vector<std::string> representative(mc.size());
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        std::string best = mc.id(s);
        for (FiniteGroup::Element g = 0; g < a.group().order(); ++g) best = std::min(best, mc.id(a.act_simplex(g, s)));
        representative[s] = best;
    }
    RawMulticomplex raw;
    raw.vertices = mc.vertices();
    std::set<std::string> emitted;
    RawMulticomplex full = mc.to_raw();
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        if (representative[s] != mc.id(s) || !emitted.insert(mc.id(s)).second) continue;
        RawSimplex rs = full.simplices[s];
        for (auto& [key, facet] : rs.facets) facet = representative[mc.index_of(facet)];
        raw.simplices.push_back(std::move(rs));
    }
    Quotient q{Multicomplex::from_raw(raw), {}};
    for (const auto& v : mc.vertices()) q.projection.vertex_map[v] = v;
    for (SimplexIndex s = 0; s < mc.size(); ++s) q.projection.simplex_map[mc.id(s)] = representative[s];
    return q;
}

OrbitPartition orbits_of(const GroupAction& a, const std::vector<AlgebraicSimplex>& simplices) {
    OrbitPartition out;
    out.degree = simplices.empty() ? 0 : simplices.front().degree();
    std::set<AlgebraicSimplex> seen;
    std::vector<AlgebraicSimplex> sorted = simplices;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& s : sorted) {
        if (seen.count(s)) continue;
        std::set<AlgebraicSimplex> orbit;
        for (FiniteGroup::Element g = 0; g < a.group().order(); ++g) orbit.insert(a.act(g, s));
        seen.insert(orbit.begin(), orbit.end());
        out.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

OrbitPartition orbits(const GroupAction& a, int k) {
    const Multicomplex& mc = a.complex();
    std::vector<AlgebraicSimplex> all;
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        if (mc.simplex(s).dimension() != k) continue;
        AlgebraicSimplex t{mc.id(s), mc.vertex_names(s)};
        do {
            all.push_back(t);
        } while (std::next_permutation(t.vertices.begin(), t.vertices.end()));
    }
    OrbitPartition out = orbits_of(a, all);
    out.degree = k;
    return out;
}

Chain act_on_chain(const GroupAction& a, FiniteGroup::Element g, const Chain& c) {
    Chain out(c.degree(), c.ring());
    for (const auto& [s, q] : c.terms()) out.add(a.act(g, s), q);
    return out;
}

Cochain act_on_cochain(const GroupAction& a, FiniteGroup::Element g, const Cochain& phi) {
    // (g . phi)(s) = phi(g^-1 s)
    Cochain out(phi.degree(), phi.ring());
    for (const auto& [s, q] : phi.terms()) out.add(a.act(g, s), q);
    return out;
}

Cochain average_cochain(const GroupAction& a, const Cochain& phi) {
    if (phi.ring() != Ring::rationals) throw DomainError("averaging needs rational coefficients");
    Cochain out(phi.degree(), Ring::rationals);
    const Rational weight = Rational(1) / Rational(static_cast<long>(a.group().order()));
    for (FiniteGroup::Element g = 0; g < a.group().order(); ++g)
        for (const auto& [s, q] : phi.terms()) out.add(a.act(g, s), weight * q);
    return out;
}

bool is_invariant(const GroupAction& a, const Cochain& phi) {
    for (FiniteGroup::Element g = 0; g < a.group().order(); ++g)
        if (!(act_on_cochain(a, g, phi) == phi)) return false;
    return true;
}

}  // namespace mcx
