#include "mcx/multicomplex.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcx {

std::string subset_key(std::span<const std::string> names) {
    std::string key;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) key += ',';
        key += names[i];
    }
    return key;
}

std::vector<std::string> split_subset_key(std::string_view key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = key.find(',', start);
        parts.emplace_back(key.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

bool ValidationReport::has(std::string_view rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
}

void ValidationReport::add(std::string rule, std::vector<std::string> subjects, std::string message) {
    violations.push_back({std::move(rule), std::move(subjects), std::move(message)});
}

Multicomplex Multicomplex::from_raw(const RawMulticomplex& raw) {
    Multicomplex mc;
    mc.vertices_ = raw.vertices;
    std::sort(mc.vertices_.begin(), mc.vertices_.end());
    if (std::adjacent_find(mc.vertices_.begin(), mc.vertices_.end()) != mc.vertices_.end())
        throw ReferenceError("duplicate vertex name");
    for (const auto& v : mc.vertices_)
        if (v.empty() || v.find(',') != std::string::npos)
            throw ReferenceError("vertex name '" + v + "' must be nonempty and free of commas");
    for (VertexIndex v = 0; v < mc.vertices_.size(); ++v) mc.vertex_lookup_.emplace(mc.vertices_[v], v);

    mc.simplices_.reserve(raw.simplices.size());
    for (const auto& rs : raw.simplices) {
        if (rs.vertices.empty()) throw ReferenceError("simplex '" + rs.id + "' has no vertices");
        if (mc.simplex_lookup_.count(rs.id)) throw ReferenceError("duplicate simplex id '" + rs.id + "'");
        Simplex s;
        s.id = rs.id;
        for (const auto& name : rs.vertices) {
            auto it = mc.vertex_lookup_.find(name);
            if (it == mc.vertex_lookup_.end())
                throw ReferenceError("simplex '" + rs.id + "' names unknown vertex '" + name + "'");
            s.vertices.push_back(it->second);
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end()) {
            mc.duplicate_vertex_simplices_.push_back(rs.id);
            s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
        }
        mc.simplex_lookup_.emplace(rs.id, static_cast<SimplexIndex>(mc.simplices_.size()));
        mc.simplices_.push_back(std::move(s));
    }

    for (std::size_t i = 0; i < raw.simplices.size(); ++i) {
        const auto& rs = raw.simplices[i];
        Simplex& s = mc.simplices_[i];
        s.facets.assign(s.vertices.size() > 1 ? s.vertices.size() : 0, kNoSimplex);
        for (const auto& [key, facet_id] : rs.facets) {
            std::vector<VertexIndex> subset;
            for (const auto& name : split_subset_key(key)) {
                auto it = mc.vertex_lookup_.find(name);
                if (it == mc.vertex_lookup_.end())
                    throw ReferenceError("simplex '" + rs.id + "' facet key '" + key + "' names unknown vertex");
                subset.push_back(it->second);
            }
            std::sort(subset.begin(), subset.end());
            if (s.vertices.size() < 2 || subset.size() + 1 != s.vertices.size() ||
                !std::includes(s.vertices.begin(), s.vertices.end(), subset.begin(), subset.end()) ||
                std::adjacent_find(subset.begin(), subset.end()) != subset.end())
                throw ReferenceError("simplex '" + rs.id + "' facet key '" + key +
                                     "' is not a codimension-one vertex subset");
            auto target = mc.simplex_lookup_.find(facet_id);
            if (target == mc.simplex_lookup_.end())
                throw ReferenceError("simplex '" + rs.id + "' refers to unknown facet '" + facet_id + "'");
            std::size_t missing = 0;
            while (missing < subset.size() && subset[missing] == s.vertices[missing]) ++missing;
            if (s.facets[missing] != kNoSimplex)
                throw ReferenceError("simplex '" + rs.id + "' lists facet key '" + key + "' twice");
            s.facets[missing] = target->second;
        }
        mc.by_vertex_set_[s.vertices].push_back(static_cast<SimplexIndex>(i));
    }
    return mc;
}

RawMulticomplex Multicomplex::to_raw() const {
    RawMulticomplex raw;
    raw.vertices = vertices_;
    for (const auto& s : simplices_) {
        RawSimplex rs;
        rs.id = s.id;
        for (auto v : s.vertices) rs.vertices.push_back(vertices_[v]);
        for (std::size_t i = 0; i < s.facets.size(); ++i) {
            if (s.facets[i] == kNoSimplex) continue;
            std::vector<std::string> names;
            for (std::size_t j = 0; j < s.vertices.size(); ++j)
                if (j != i) names.push_back(vertices_[s.vertices[j]]);
            rs.facets.emplace(subset_key(names), simplices_[s.facets[i]].id);
        }
        raw.simplices.push_back(std::move(rs));
    }
    return raw;
}

std::optional<VertexIndex> Multicomplex::find_vertex(std::string_view name) const {
    auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

VertexIndex Multicomplex::vertex_index(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw ReferenceError("unknown vertex '" + std::string(name) + "'");
}

std::optional<SimplexIndex> Multicomplex::find(std::string_view id) const {
    auto it = simplex_lookup_.find(id);
    if (it == simplex_lookup_.end()) return std::nullopt;
    return it->second;
}

SimplexIndex Multicomplex::index_of(std::string_view id) const {
    if (auto s = find(id)) return *s;
    throw ReferenceError("unknown simplex '" + std::string(id) + "'");
}

int Multicomplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, s.dimension());
    return d;
}

std::vector<SimplexIndex> Multicomplex::simplices_of_dimension(int d) const {
    std::vector<SimplexIndex> out;
    for (SimplexIndex i = 0; i < simplices_.size(); ++i)
        if (simplices_[i].dimension() == d) out.push_back(i);
    return out;
}

std::size_t Multicomplex::count(int d) const {
    return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
                                                  [d](const Simplex& s) { return s.dimension() == d; }));
}

std::span<const SimplexIndex> Multicomplex::with_vertex_set(const std::vector<VertexIndex>& sorted) const {
    auto it = by_vertex_set_.find(sorted);
    if (it == by_vertex_set_.end()) return {};
    return it->second;
}

std::optional<SimplexIndex> Multicomplex::vertex_simplex(VertexIndex v) const {
    auto set = with_vertex_set({v});
    if (set.size() != 1) return std::nullopt;
    return set.front();
}

SimplexIndex Multicomplex::facet_opposite(SimplexIndex s, VertexIndex v) const {
    const Simplex& simplex = simplices_.at(s);
    auto it = std::lower_bound(simplex.vertices.begin(), simplex.vertices.end(), v);
    if (it == simplex.vertices.end() || *it != v || simplex.vertices.size() < 2)
        throw DomainError("vertex '" + vertices_.at(v) + "' is not a removable vertex of '" + simplex.id + "'");
    SimplexIndex f = simplex.facets[static_cast<std::size_t>(it - simplex.vertices.begin())];
    if (f == kNoSimplex)
        throw DomainError("simplex '" + simplex.id + "' has no facet opposite '" + vertices_[v] + "'");
    return f;
}

SimplexIndex Multicomplex::face(SimplexIndex s, std::span<const VertexIndex> subset) const {
    std::vector<VertexIndex> drop;
    std::set_difference(simplices_.at(s).vertices.begin(), simplices_.at(s).vertices.end(), subset.begin(),
                        subset.end(), std::back_inserter(drop));
    if (drop.size() + subset.size() != simplices_[s].vertices.size() || subset.empty())
        throw DomainError("face subset is not a nonempty subset of '" + simplices_[s].id + "'");
    SimplexIndex cur = s;
    for (auto v : drop) cur = facet_opposite(cur, v);
    return cur;
}

std::vector<SimplexIndex> Multicomplex::faces(SimplexIndex s) const {
    const auto& vs = simplices_.at(s).vertices;
    std::set<SimplexIndex> out;
    const std::size_t n = vs.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<VertexIndex> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(vs[i]);
        out.insert(face(s, subset));
    }
    return {out.begin(), out.end()};
}

std::vector<std::string> Multicomplex::vertex_names(SimplexIndex s) const {
    std::vector<std::string> names;
    for (auto v : simplices_.at(s).vertices) names.push_back(vertices_[v]);
    return names;
}

MulticomplexBuilder& MulticomplexBuilder::vertex(const std::string& name) { return vertex(name, name); }

MulticomplexBuilder& MulticomplexBuilder::vertex(const std::string& name, const std::string& simplex_id) {
    raw_.vertices.push_back(name);
    raw_.simplices.push_back({simplex_id, {name}, {}});
    vertex_sets_[simplex_id] = {name};
    return *this;
}

MulticomplexBuilder& MulticomplexBuilder::simplex(const std::string& id, const std::vector<std::string>& facet_ids) {
    std::set<std::string> all;
    for (const auto& f : facet_ids) {
        auto it = vertex_sets_.find(f);
        if (it == vertex_sets_.end()) throw ReferenceError("unknown facet '" + f + "'");
        all.insert(it->second.begin(), it->second.end());
    }
    RawSimplex rs{id, {all.begin(), all.end()}, {}};
    for (const auto& f : facet_ids) rs.facets[subset_key(vertex_sets_[f])] = f;
    vertex_sets_[id] = rs.vertices;
    raw_.simplices.push_back(std::move(rs));
    return *this;
}

ValidationReport validate(const Multicomplex& mc) {
    ValidationReport report;
    for (VertexIndex v = 0; v < mc.vertices().size(); ++v) {
        auto set = mc.with_vertex_set({v});
        if (set.size() != 1) {
            std::vector<std::string> ids;
            for (auto s : set) ids.push_back(mc.id(s));
            if (ids.empty()) ids.push_back(mc.vertex_name(v));
            report.add("singleton", ids,
                       "vertex '" + mc.vertex_name(v) + "' has " + std::to_string(set.size()) + " 0-simplices");
        }
    }
    for (const auto& id : mc.repeated_vertex_simplices())
        report.add("distinct-vertices", {id}, "simplex '" + id + "' repeats a vertex");

    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        const Simplex& simplex = mc.simplex(s);
        if (simplex.vertices.size() < 2) continue;
        bool facets_ok = true;
        for (std::size_t i = 0; i < simplex.facets.size(); ++i) {
            std::vector<VertexIndex> expected;
            for (std::size_t j = 0; j < simplex.vertices.size(); ++j)
                if (j != i) expected.push_back(simplex.vertices[j]);
            std::vector<std::string> names;
            for (auto v : expected) names.push_back(mc.vertex_name(v));
            if (simplex.facets[i] == kNoSimplex) {
                report.add("facet-missing", {simplex.id, subset_key(names)},
                           "no facet for vertex subset {" + subset_key(names) + "}");
                facets_ok = false;
            } else if (mc.simplex(simplex.facets[i]).vertices != expected) {
                report.add("facet-vertex-set", {simplex.id, mc.id(simplex.facets[i])},
                           "facet '" + mc.id(simplex.facets[i]) + "' does not have vertex set {" +
                               subset_key(names) + "}");
                facets_ok = false;
            }
        }
        if (!facets_ok || simplex.vertices.size() < 3) continue;
        for (std::size_t i = 0; i < simplex.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < simplex.vertices.size(); ++j) {
                const Simplex& fi = mc.simplex(simplex.facets[i]);
                const Simplex& fj = mc.simplex(simplex.facets[j]);
                auto pos = [](const Simplex& t, VertexIndex v) {
                    return static_cast<std::size_t>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                                    t.vertices.begin());
                };
                SimplexIndex a = fi.facets.empty() ? kNoSimplex : fi.facets[pos(fi, simplex.vertices[j])];
                SimplexIndex b = fj.facets.empty() ? kNoSimplex : fj.facets[pos(fj, simplex.vertices[i])];
                if (a == kNoSimplex || b == kNoSimplex) continue;  // reported on the facet itself
                if (a != b) {
                    report.add("composition", {simplex.id, mc.id(a), mc.id(b)},
                               "removing '" + mc.vertex_name(simplex.vertices[i]) + "' and '" +
                                   mc.vertex_name(simplex.vertices[j]) + "' from '" + simplex.id +
                                   "' gives '" + mc.id(a) + "' or '" + mc.id(b) + "' depending on the order");
                }
            }
        }
    }
    return report;
}

void require_valid(const Multicomplex& mc, std::string_view context) {
    auto report = validate(mc);
    if (report.ok()) return;
    std::ostringstream msg;
    msg << context << ": not a multicomplex:";
    for (const auto& v : report.violations) msg << " [" << v.rule << "] " << v.message << ';';
    throw DomainError(msg.str());
}

MapReport validate_simplicial_map(const SimplicialMap& f, const Multicomplex& source, const Multicomplex& target) {
    for (const auto& [a, b] : f.vertex_map) {
        source.vertex_index(a);
        target.vertex_index(b);
    }
    for (const auto& [a, b] : f.simplex_map) {
        source.index_of(a);
        target.index_of(b);
    }

    MapReport out;
    auto& report = out.report;
    bool total = true;
    for (const auto& v : source.vertices()) {
        if (!f.vertex_map.count(v)) {
            report.add("total", {v}, "vertex '" + v + "' has no image");
            total = false;
        }
    }
    for (const auto& s : source.simplices()) {
        if (!f.simplex_map.count(s.id)) {
            report.add("total", {s.id}, "simplex '" + s.id + "' has no image");
            total = false;
        }
    }
    if (!total) return out;

    auto image_set = [&](const std::vector<VertexIndex>& vs) {
        std::vector<VertexIndex> img;
        for (auto v : vs) img.push_back(target.vertex_index(f.vertex_map.at(source.vertex_name(v))));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    };

    out.non_degenerate = true;
    std::vector<std::size_t> target_hits(target.size(), 0);
    bool vertex_sets_ok = true;
    for (SimplexIndex s = 0; s < source.size(); ++s) {
        const auto& simplex = source.simplex(s);
        SimplexIndex image = target.index_of(f.simplex_map.at(simplex.id));
        ++target_hits[image];
        auto fa = image_set(simplex.vertices);
        if (fa.size() != simplex.vertices.size()) out.non_degenerate = false;
        if (target.simplex(image).vertices != fa) {
            report.add("vertex-set", {simplex.id, target.id(image)},
                       "image of '" + simplex.id + "' does not have vertex set f(A)");
            vertex_sets_ok = false;
        }
    }
    if (vertex_sets_ok) {
        for (SimplexIndex s = 0; s < source.size(); ++s) {
            const auto& simplex = source.simplex(s);
            SimplexIndex image = target.index_of(f.simplex_map.at(simplex.id));
            for (std::size_t i = 0; i < simplex.facets.size(); ++i) {
                if (simplex.facets[i] == kNoSimplex) continue;
                SimplexIndex facet_image = target.index_of(f.simplex_map.at(source.id(simplex.facets[i])));
                auto fb = target.simplex(facet_image).vertices;
                SimplexIndex expected;
                try {
                    expected = fb == target.simplex(image).vertices ? image : target.face(image, fb);
                } catch (const DomainError&) {
                    expected = kNoSimplex;
                }
                if (expected != facet_image) {
                    report.add("facet-commutation", {simplex.id, source.id(simplex.facets[i])},
                               "image of facet '" + source.id(simplex.facets[i]) +
                                   "' is not the corresponding face of the image of '" + simplex.id + "'");
                }
            }
        }
    }

    std::set<std::string> vertex_images;
    for (const auto& [a, b] : f.vertex_map) vertex_images.insert(b);
    out.injective = vertex_images.size() == f.vertex_map.size() &&
                    std::all_of(target_hits.begin(), target_hits.end(), [](std::size_t n) { return n <= 1; });
    out.surjective = vertex_images.size() == target.vertices().size() &&
                     std::all_of(target_hits.begin(), target_hits.end(), [](std::size_t n) { return n >= 1; });
    return out;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap h;
    for (const auto& [a, b] : f.vertex_map) {
        auto it = g.vertex_map.find(b);
        if (it == g.vertex_map.end()) throw ReferenceError("composition: vertex '" + b + "' has no image");
        h.vertex_map[a] = it->second;
    }
    for (const auto& [a, b] : f.simplex_map) {
        auto it = g.simplex_map.find(b);
        if (it == g.simplex_map.end()) throw ReferenceError("composition: simplex '" + b + "' has no image");
        h.simplex_map[a] = it->second;
    }
    return h;
}

SimplicialMap identity_map(const Multicomplex& mc) {
    SimplicialMap f;
    for (const auto& v : mc.vertices()) f.vertex_map[v] = v;
    for (const auto& s : mc.simplices()) f.simplex_map[s.id] = s.id;
    return f;
}

}  // namespace mcx
