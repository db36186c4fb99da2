#include "mcx/constructions.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mcx {

namespace {

std::vector<std::string> names_of(const Multicomplex& mc, const std::vector<VertexIndex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(mc.vertex_name(v));
    return out;
}

Multicomplex restrict_to(const Multicomplex& mc, const std::vector<bool>& keep) {
    RawMulticomplex full = mc.to_raw();
    RawMulticomplex raw;
    std::set<std::string> used;
    for (std::size_t i = 0; i < full.simplices.size(); ++i) {
        if (!keep[i]) continue;
        raw.simplices.push_back(full.simplices[i]);
        used.insert(full.simplices[i].vertices.begin(), full.simplices[i].vertices.end());
    }
    raw.vertices.assign(used.begin(), used.end());
    return Multicomplex::from_raw(raw);
}

}  // namespace

Multicomplex skeleton(const Multicomplex& mc, int n) {
    if (n < 0) throw DomainError("skeleton degree must be nonnegative");
    RawMulticomplex raw = mc.to_raw();
    std::erase_if(raw.simplices, [n](const RawSimplex& s) { return static_cast<int>(s.vertices.size()) > n + 1; });
    return Multicomplex::from_raw(raw);
}

bool is_simplicial_complex(const Multicomplex& mc) {
    for (const auto& s : mc.simplices())
        if (mc.with_vertex_set(s.vertices).size() > 1) return false;
    return true;
}

long long euler_characteristic(const Multicomplex& mc) {
    long long chi = 0;
    for (const auto& s : mc.simplices()) chi += s.dimension() % 2 == 0 ? 1 : -1;
    return chi;
}

std::set<std::string> facet_closure(const Multicomplex& mc, const std::set<std::string>& ids) {
    std::set<std::string> out;
    std::vector<SimplexIndex> stack;
    for (const auto& id : ids) stack.push_back(mc.index_of(id));
    while (!stack.empty()) {
        SimplexIndex s = stack.back();
        stack.pop_back();
        if (!out.insert(mc.id(s)).second) continue;
        for (auto f : mc.simplex(s).facets)
            if (f != kNoSimplex) stack.push_back(f);
    }
    return out;
}

Multicomplex submulticomplex(const Multicomplex& mc, const std::set<std::string>& ids, bool close) {
    std::set<std::string> chosen = close ? facet_closure(mc, ids) : ids;
    std::vector<bool> keep(mc.size(), false);
    for (const auto& id : chosen) keep[mc.index_of(id)] = true;
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        if (!keep[s]) continue;
        for (auto f : mc.simplex(s).facets)
            if (f != kNoSimplex && !keep[f])
                throw DomainError("simplex set is not closed: '" + mc.id(s) + "' needs facet '" + mc.id(f) + "'");
        if (mc.simplex(s).vertices.size() == 1) continue;
        for (auto v : mc.simplex(s).vertices) {
            auto vs = mc.vertex_simplex(v);
            if (vs && !keep[*vs])
                throw DomainError("simplex set is not closed: '" + mc.id(s) + "' needs vertex '" +
                                  mc.vertex_name(v) + "'");
        }
    }
    return restrict_to(mc, keep);
}

std::string sphere_north_id(const std::vector<std::string>& labels) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    return "N[" + subset_key(sorted) + "]";
}

std::string sphere_south_id(const std::vector<std::string>& labels) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    return "S[" + subset_key(sorted) + "]";
}

Multicomplex special_sphere(int n, const std::vector<std::string>& labels) {
    if (n < 1) throw DomainError("special sphere needs n >= 1");
    if (labels.size() != static_cast<std::size_t>(n + 1))
        throw DomainError("special sphere of dimension " + std::to_string(n) + " needs " +
                          std::to_string(n + 1) + " labels");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("special sphere labels must be distinct");

    auto id_of = [&](const std::vector<std::string>& subset) {
        return subset.size() == 1 ? subset.front() : "[" + subset_key(subset) + "]";
    };
    RawMulticomplex raw;
    raw.vertices = sorted;
    const std::size_t m = sorted.size();
    std::vector<std::vector<std::string>> subsets;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
        std::vector<std::string> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(sorted[i]);
        subsets.push_back(std::move(subset));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    auto facets_of = [&](const std::vector<std::string>& subset) {
        std::map<std::string, std::string> facets;
        if (subset.size() < 2) return facets;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            std::vector<std::string> face = subset;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            facets[subset_key(face)] = id_of(face);
        }
        return facets;
    };
    for (const auto& subset : subsets) raw.simplices.push_back({id_of(subset), subset, facets_of(subset)});
    raw.simplices.push_back({sphere_north_id(sorted), sorted, facets_of(sorted)});
    raw.simplices.push_back({sphere_south_id(sorted), sorted, facets_of(sorted)});
    return Multicomplex::from_raw(raw);
}

Multicomplex special_sphere(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return special_sphere(n, labels);
}

ProductWithInterval product_with_interval(const Multicomplex& mc) {
    auto level_vertex = [](const std::string& v, int l) { return v + "@" + std::to_string(l); };
    auto apex = [&](SimplexIndex s) {
        std::string id = mc.id(s);
        std::replace(id.begin(), id.end(), ',', ';');
        return "c(" + id + ")";
    };

    RawMulticomplex raw;
    for (const auto& v : mc.vertices()) {
        raw.vertices.push_back(level_vertex(v, 0));
        raw.vertices.push_back(level_vertex(v, 1));
    }
    for (SimplexIndex s = 0; s < mc.size(); ++s) raw.vertices.push_back(apex(s));

    // Level copies.
    for (int l = 0; l < 2; ++l) {
        for (SimplexIndex s = 0; s < mc.size(); ++s) {
            RawSimplex rs;
            rs.id = level_vertex(mc.id(s), l);
            for (const auto& v : mc.vertex_names(s)) rs.vertices.push_back(level_vertex(v, l));
            const auto& simplex = mc.simplex(s);
            for (std::size_t i = 0; i < simplex.facets.size(); ++i) {
                std::vector<std::string> names;
                for (std::size_t j = 0; j < simplex.vertices.size(); ++j)
                    if (j != i) names.push_back(level_vertex(mc.vertex_name(simplex.vertices[j]), l));
                std::sort(names.begin(), names.end());
                rs.facets[subset_key(names)] = level_vertex(mc.id(simplex.facets[i]), l);
            }
            raw.simplices.push_back(std::move(rs));
        }
    }

    // Cone simplices: a strictly decreasing face chain plus an optional level base.
    struct Base {
        SimplexIndex simplex;
        int level;
    };
    auto cone_id = [&](const std::vector<SimplexIndex>& chain, const std::optional<Base>& base) {
        std::string id;
        for (std::size_t i = 0; i < chain.size(); ++i) id += (i ? "*" : "") + apex(chain[i]);
        if (base) id += "*" + level_vertex(mc.id(base->simplex), base->level);
        return id;
    };
    auto face_id = [&](const std::vector<SimplexIndex>& chain, const std::optional<Base>& base) {
        if (chain.empty()) return level_vertex(mc.id(base->simplex), base->level);
        if (chain.size() == 1 && !base) return apex(chain.front());
        return cone_id(chain, base);
    };

    std::vector<RawSimplex> cones;
    std::function<void(std::vector<SimplexIndex>&)> emit = [&](std::vector<SimplexIndex>& chain) {
        SimplexIndex last = chain.back();
        std::vector<std::optional<Base>> bases{std::nullopt};
        for (auto t : mc.faces(last))
            for (int l = 0; l < 2; ++l) bases.push_back(Base{t, l});
        for (const auto& base : bases) {
            if (chain.size() == 1 && !base) continue;  // the apex vertex itself
            RawSimplex rs;
            rs.id = cone_id(chain, base);
            std::vector<std::string> vs;
            for (auto c : chain) vs.push_back(apex(c));
            if (base)
                for (const auto& v : mc.vertex_names(base->simplex)) vs.push_back(level_vertex(v, base->level));
            std::sort(vs.begin(), vs.end());
            rs.vertices = vs;
            auto add_facet = [&](std::vector<std::string> removed_from, const std::string& facet) {
                std::sort(removed_from.begin(), removed_from.end());
                rs.facets[subset_key(removed_from)] = facet;
            };
            for (std::size_t i = 0; i < chain.size(); ++i) {
                std::vector<SimplexIndex> rest = chain;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                std::vector<std::string> remaining = vs;
                std::erase(remaining, apex(chain[i]));
                add_facet(remaining, face_id(rest, base));
            }
            if (base) {
                const auto& b = mc.simplex(base->simplex);
                for (auto v : b.vertices) {
                    std::vector<std::string> remaining = vs;
                    std::erase(remaining, level_vertex(mc.vertex_name(v), base->level));
                    std::optional<Base> smaller;
                    if (b.vertices.size() > 1) smaller = Base{mc.facet_opposite(base->simplex, v), base->level};
                    add_facet(remaining, face_id(chain, smaller));
                }
            }
            cones.push_back(std::move(rs));
        }
        for (auto f : mc.faces(last)) {
            if (f == last) continue;
            chain.push_back(f);
            emit(chain);
            chain.pop_back();
        }
    };
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        raw.simplices.push_back({apex(s), {apex(s)}, {}});
        std::vector<SimplexIndex> chain{s};
        emit(chain);
    }
    std::sort(cones.begin(), cones.end(), [](const RawSimplex& a, const RawSimplex& b) {
        return a.vertices.size() != b.vertices.size() ? a.vertices.size() < b.vertices.size() : a.id < b.id;
    });
    for (auto& c : cones) raw.simplices.push_back(std::move(c));

    ProductWithInterval out{Multicomplex::from_raw(raw), {}, {}};
    for (const auto& v : mc.vertices()) {
        out.i0.vertex_map[v] = level_vertex(v, 0);
        out.i1.vertex_map[v] = level_vertex(v, 1);
    }
    for (const auto& s : mc.simplices()) {
        out.i0.simplex_map[s.id] = level_vertex(s.id, 0);
        out.i1.simplex_map[s.id] = level_vertex(s.id, 1);
    }
    return out;
}

std::set<std::string> compatible_simplices(const Multicomplex& mc, const std::string& id) {
    SimplexIndex s = mc.index_of(id);
    const Simplex& simplex = mc.simplex(s);
    if (simplex.dimension() < 1) throw DomainError("compatible simplices are defined for dimension >= 1");
    std::set<std::string> out;
    for (auto t : mc.with_vertex_set(simplex.vertices))
        if (mc.simplex(t).facets == simplex.facets) out.insert(mc.id(t));
    return out;
}

Multicomplex cone(const Multicomplex& mc, const std::string& apex) {
    if (mc.find_vertex(apex)) throw DomainError("cone apex '" + apex + "' is already a vertex");
    RawMulticomplex raw = mc.to_raw();
    raw.vertices.push_back(apex);
    raw.simplices.push_back({apex, {apex}, {}});
    auto cone_id = [&](const std::string& id) { return apex + "*" + id; };
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        const auto& simplex = mc.simplex(s);
        RawSimplex rs;
        rs.id = cone_id(simplex.id);
        rs.vertices = names_of(mc, simplex.vertices);
        rs.vertices.push_back(apex);
        std::sort(rs.vertices.begin(), rs.vertices.end());
        rs.facets[subset_key(names_of(mc, simplex.vertices))] = simplex.id;
        for (std::size_t i = 0; i < simplex.vertices.size(); ++i) {
            std::vector<std::string> remaining = rs.vertices;
            std::erase(remaining, mc.vertex_name(simplex.vertices[i]));
            rs.facets[subset_key(remaining)] =
                simplex.vertices.size() == 1 ? apex : cone_id(mc.id(simplex.facets[i]));
        }
        raw.simplices.push_back(std::move(rs));
    }
    return Multicomplex::from_raw(raw);
}

Multicomplex simplicial_complex_from_facets(const std::vector<std::vector<std::string>>& facets) {
    std::set<std::vector<std::string>> all;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        const std::size_t m = f.size();
        if (m > 20) throw DomainError("facet too large");
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::string> subset;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) subset.push_back(f[i]);
            all.insert(std::move(subset));
        }
    }
    std::vector<std::vector<std::string>> ordered(all.begin(), all.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    RawMulticomplex raw;
    for (const auto& s : ordered) {
        if (s.size() == 1) raw.vertices.push_back(s.front());
        RawSimplex rs{subset_key(s), s, {}};
        if (s.size() > 1) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                rs.facets[subset_key(face)] = subset_key(face);
            }
        }
        raw.simplices.push_back(std::move(rs));
    }
    return Multicomplex::from_raw(raw);
}

}  // namespace mcx
