#include "mcx/covers.hpp"
#include "mcx/constructions.hpp"

#include "mcx/error.hpp"

#include <algorithm>

namespace mcx {

std::size_t Cover::position(const std::string& index) const {
    auto it = std::find(indices.begin(), indices.end(), index);
    if (it == indices.end()) throw ReferenceError("unknown cover index '" + index + "'");
    return static_cast<std::size_t>(it - indices.begin());
}

namespace {

// Members containing each point.
std::map<std::string, std::vector<std::string>> stars(const Cover& c) {
    std::map<std::string, std::vector<std::string>> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& x : c.sets[i]) out[x].push_back(c.indices[i]);
    return out;
}

}  // namespace

Multicomplex nerve(const Cover& c, int max_dim) {
    std::set<std::string> seen;
    for (const auto& idx : c.indices)
        if (!seen.insert(idx).second) throw ReferenceError("duplicate cover index '" + idx + "'");
    std::vector<std::vector<std::string>> facets;
    for (auto& [x, members] : stars(c)) {
        if (max_dim >= 0 && members.size() > static_cast<std::size_t>(max_dim) + 1) {
            // Every (max_dim + 1)-subset spans a simplex.
            const std::size_t k = static_cast<std::size_t>(max_dim) + 1;
            std::vector<bool> pick(members.size(), false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::vector<std::string> f;
                for (std::size_t i = 0; i < members.size(); ++i)
                    if (pick[i]) f.push_back(members[i]);
                facets.push_back(std::move(f));
            } while (std::prev_permutation(pick.begin(), pick.end()));
        } else {
            facets.push_back(members);
        }
    }
    return simplicial_complex_from_facets(facets);
}

std::size_t multiplicity(const Cover& c) {
    std::size_t best = 0;
    for (const auto& [x, members] : stars(c)) best = std::max(best, members.size());
    return best;
}

Coloring coloring_adapted(const Multicomplex& host, const Cover& c) {
    Coloring out;
    for (VertexIndex v = 0; v < host.vertices().size(); ++v) {
        std::set<std::string> star{host.vertex_name(v)};
        for (const auto& s : host.simplices())
            if (std::binary_search(s.vertices.begin(), s.vertices.end(), v))
                for (auto w : s.vertices) star.insert(host.vertex_name(w));
        bool found = false;
        for (std::size_t i = 0; i < c.size() && !found; ++i) {
            if (std::includes(c.sets[i].begin(), c.sets[i].end(), star.begin(), star.end())) {
                out[host.vertex_name(v)] = c.indices[i];
                found = true;
            }
        }
        if (!found)
            throw DomainError("no cover member contains the closed star of vertex '" + host.vertex_name(v) + "'");
    }
    return out;
}

VanishingReport check_repeated_color_vanishing(const Cochain& phi, const GroupAction& a, const Coloring& coloring,
                                               const std::map<std::string, ColorWitness>& witnesses) {
    const Multicomplex& mc = a.complex();
    VanishingReport report;
    if (!is_alternating(phi)) report.failures.push_back("cochain is not alternating");
    if (!is_invariant(a, phi)) report.failures.push_back("cochain is not invariant under the action");
    for (const auto& [id, w] : witnesses) {
        SimplexIndex s = mc.index_of(id);
        auto g = a.group().find(w.element);
        VertexIndex x = mc.vertex_index(w.first), y = mc.vertex_index(w.second);
        const auto& vs = mc.simplex(s).vertices;
        if (!std::binary_search(vs.begin(), vs.end(), x) || !std::binary_search(vs.begin(), vs.end(), y) || x == y)
            throw DomainError("witness for '" + id + "' names vertices outside the simplex");
        if (a.act_simplex(g, s) != s) throw DomainError("witness element '" + w.element + "' does not fix '" + id + "'");
        for (auto v : vs) {
            VertexIndex expected = v == x ? y : v == y ? x : v;
            if (a.act_vertex(g, v) != expected)
                throw DomainError("witness element '" + w.element + "' does not transpose '" + w.first + "' and '" +
                                  w.second + "' in '" + id + "'");
        }
        if (coloring.at(w.first) != coloring.at(w.second))
            throw DomainError("witness vertices of '" + id + "' have different colors");
    }

    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        if (mc.simplex(s).dimension() != phi.degree()) continue;
        const auto names = mc.vertex_names(s);
        std::set<std::string> colors;
        for (const auto& v : names) {
            auto it = coloring.find(v);
            if (it == coloring.end()) throw ReferenceError("vertex '" + v + "' has no color");
            colors.insert(it->second);
        }
        if (colors.size() == names.size()) {
            report.unconstrained.push_back(mc.id(s));
            continue;
        }
        auto w = witnesses.find(mc.id(s));
        if (w == witnesses.end()) {
            report.unwitnessed.push_back(mc.id(s));
            continue;
        }
        auto g = a.group().find(w->second.element);
        AlgebraicSimplex t{mc.id(s), names};
        do {
            Rational value = phi.coefficient(t);
            // g.t is t with the two witnessed vertices exchanged: an odd reordering.
            Rational image = phi.coefficient(a.act(g, t));
            if (image != value)
                report.failures.push_back("cochain is not invariant at " + to_string(t) + " under '" +
                                          w->second.element + "'");
            else if (-value != image)
                report.failures.push_back("cochain is not alternating at " + to_string(t));
            else if (value != 0)
                report.failures.push_back("nonzero value at " + to_string(t));
            report.checked.push_back({t, value});
        } while (std::next_permutation(t.vertices.begin(), t.vertices.end()));
    }
    return report;
}

}  // namespace mcx
