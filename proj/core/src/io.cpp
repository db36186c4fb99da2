#include "mcx/io.hpp"

#include "mcx/error.hpp"

#include <utility>

namespace mcx::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ReferenceError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json versioned(Json body) {
    Json out = {{"schema_version", kSchemaVersion}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return out;
}

std::string coefficient_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    throw ReferenceError("coefficient must be an integer or a \"p/q\" string");
}

template <class Tag>
Json combination_to_json(const LinearCombination<Tag>& c) {
    Json terms = Json::array();
    for (const auto& [s, q] : c.terms())
        terms.push_back({{"simplex", s.simplex}, {"vertices", s.vertices}, {"coeff", to_string(q)}});
    return versioned({{"degree", c.degree()}, {"ring", to_string(c.ring())}, {"terms", terms}});
}

template <class Tag>
LinearCombination<Tag> combination_from_json(const Json& j) {
    return guarded("chain", [&] {
        LinearCombination<Tag> c(j.at("degree").get<int>(), parse_ring(j.value("ring", std::string("Q"))));
        for (const auto& t : j.at("terms")) {
            AlgebraicSimplex s{t.at("simplex").get<std::string>(), t.at("vertices").get<std::vector<std::string>>()};
            if (s.degree() != c.degree())
                throw ReferenceError("term " + to_string(s) + " does not have degree " + std::to_string(c.degree()));
            c.add(s, parse_rational(coefficient_text(t.at("coeff"))));
        }
        return c;
    });
}

Json map_to_json(const std::map<std::string, std::string>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
}

std::map<std::string, std::string> map_from_json(const Json& j) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) out[k] = v.get<std::string>();
    return out;
}

}  // namespace

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ReferenceError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const RawMulticomplex& raw) {
    Json simplices = Json::array();
    for (const auto& s : raw.simplices)
        simplices.push_back({{"id", s.id}, {"vertices", s.vertices}, {"facets", map_to_json(s.facets)}});
    return versioned({{"vertices", raw.vertices}, {"simplices", simplices}});
}

Json to_json(const Multicomplex& mc) { return to_json(mc.to_raw()); }

RawMulticomplex raw_multicomplex_from_json(const Json& j) {
    return guarded("multicomplex", [&] {
        RawMulticomplex raw;
        raw.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const auto& s : j.at("simplices")) {
            RawSimplex r;
            r.id = s.at("id").get<std::string>();
            r.vertices = s.at("vertices").get<std::vector<std::string>>();
            if (s.contains("facets")) r.facets = map_from_json(s.at("facets"));
            raw.simplices.push_back(std::move(r));
        }
        return raw;
    });
}

Multicomplex multicomplex_from_json(const Json& j) { return Multicomplex::from_raw(raw_multicomplex_from_json(j)); }

Json to_json(const Chain& c) { return combination_to_json(c); }
Json to_json(const Cochain& phi) { return combination_to_json(phi); }
Chain chain_from_json(const Json& j) { return combination_from_json<ChainTag>(j); }
Cochain cochain_from_json(const Json& j) { return combination_from_json<CochainTag>(j); }

Json to_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"rule", v.rule}, {"subjects", v.subjects}, {"message", v.message}});
    return versioned({{"ok", report.ok()}, {"violations", violations}});
}

Json to_json(const HomologyResult& h) {
    Json degrees = Json::array();
    for (const auto& d : h.degrees()) {
        Json torsion = Json::array();
        for (const auto& t : d.torsion) torsion.push_back(to_string(t));
        Json gens = Json::array();
        for (const auto& g : d.generators) {
            Json cycle = to_json(g.cycle);
            cycle.erase("schema_version");
            gens.push_back({{"order", to_string(g.order)}, {"cycle", cycle}});
        }
        degrees.push_back({{"degree", d.degree},
                           {"rank", d.free_rank},
                           {"torsion", torsion},
                           {"cycles_rank", d.cycles_rank},
                           {"boundaries_rank", d.boundaries_rank},
                           {"generators", gens}});
    }
    return versioned({{"complex", h.complex().label()},
                      {"ring", to_string(h.ring())},
                      {"betti", h.betti()},
                      {"degrees", degrees}});
}

Json to_json(const SeminormResult& r) {
    auto strip = [](Json j) {
        j.erase("schema_version");
        return j;
    };
    return versioned({{"value", to_string(r.value)},
                      {"value_decimal_lossy", to_decimal(r.value)},
                      {"representative", strip(to_json(r.representative))},
                      {"bounding_chain", strip(to_json(r.bounding_chain))},
                      {"certificate", strip(to_json(r.certificate))},
                      {"pivots", r.pivots}});
}

Json to_json(const BruteForceResult& r) {
    Json rep = to_json(r.representative);
    rep.erase("schema_version");
    auto known = r.known_value();
    return versioned({{"value", known ? Json(to_string(*known)) : Json("unknown")},
                      {"best_found", to_string(r.value)},
                      {"exhaustive", r.exhaustive},
                      {"globally_optimal", r.globally_optimal},
                      {"nodes", r.nodes},
                      {"representative", rep}});
}

Json to_json(const FiniteGroup& g) {
    Json table = Json::array();
    for (const auto& row : g.table()) {
        Json r = Json::array();
        for (auto e : row) r.push_back(g.name(e));
        table.push_back(r);
    }
    return {{"elements", g.names()}, {"table", table}};
}

FiniteGroup group_from_json(const Json& j) {
    return guarded("group", [&] {
        auto names = j.at("elements").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (!index.emplace(names[i], i).second) throw ReferenceError("duplicate group element " + names[i]);
        std::vector<std::vector<FiniteGroup::Element>> table;
        for (const auto& row : j.at("table")) {
            std::vector<FiniteGroup::Element> r;
            for (const auto& e : row) {
                auto it = index.find(e.get<std::string>());
                if (it == index.end()) throw ReferenceError("unknown group element " + e.get<std::string>());
                r.push_back(it->second);
            }
            table.push_back(std::move(r));
        }
        return FiniteGroup(std::move(names), std::move(table));
    });
}

Json to_json(const GroupAction& a) {
    Json out = to_json(a.group());
    Json maps = Json::object();
    for (std::size_t g = 0; g < a.group().order(); ++g)
        maps[a.group().name(g)] = {{"vertex_map", map_to_json(a.map(g).vertex_map)},
                                   {"simplex_map", map_to_json(a.map(g).simplex_map)}};
    out["maps"] = maps;
    return versioned(out);
}

GroupAction action_from_json(const Json& j, std::shared_ptr<const Multicomplex> mc) {
    FiniteGroup group = group_from_json(j);
    std::vector<SimplicialMap> maps = guarded("action", [&] {
        std::vector<SimplicialMap> out;
        const Json& m = j.at("maps");
        for (const auto& name : group.names()) {
            if (!m.contains(name)) throw ReferenceError("action has no map for element " + name);
            const Json& e = m.at(name);
            out.push_back({map_from_json(e.at("vertex_map")), map_from_json(e.at("simplex_map"))});
        }
        for (const auto& [k, v] : m.items()) {
            (void)v;
            group.find(k);
        }
        return out;
    });
    return GroupAction(std::move(mc), std::move(group), std::move(maps));
}

Json to_json(const GroupModel& g) {
    if (g.is_finite()) return to_json(g.finite_group());
    return "Z^" + std::to_string(g.rank());
}

GroupModel group_model_from_json(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "Z") return GroupModel::free_abelian(1);
        if (s.rfind("Z^", 0) == 0) {
            try {
                std::size_t pos = 0;
                int d = std::stoi(s.substr(2), &pos);
                if (pos == s.size() - 2 && d >= 1) return GroupModel::free_abelian(static_cast<std::size_t>(d));
            } catch (const std::exception&) {
            }
        }
        throw ReferenceError("unknown group " + s);
    }
    return GroupModel::finite(group_from_json(j));
}

Json measure_to_json(const GroupModel& g, const Measure& mu) {
    Json weights = Json::object();
    for (const auto& [e, w] : mu) weights[g.key(e)] = to_string(w);
    return versioned({{"group", to_json(g)}, {"weights", weights}});
}

Measure measure_from_json(const Json& j, const GroupModel& g) {
    return guarded("measure", [&] {
        Measure mu;
        for (const auto& [k, v] : j.at("weights").items()) {
            Rational w = parse_rational(coefficient_text(v));
            if (w != 0) mu[g.parse(k)] += w;
        }
        return mu;
    });
}

Json to_json(const SparseFunction& f) {
    Json out = Json::object();
    for (const auto& [x, v] : f) out[x] = to_string(v);
    return out;
}

SparseFunction function_from_json(const Json& j) {
    return guarded("function", [&] {
        if (!j.is_object()) throw ReferenceError("a function is an object {point: value}");
        SparseFunction f;
        for (const auto& [k, v] : j.items()) add_to(f, k, parse_rational(coefficient_text(v)));
        return f;
    });
}

Json to_json(const Cover& c, const Json& host) {
    Json sets = Json::object(), amenable = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i) {
        sets[c.indices[i]] = std::vector<std::string>(c.sets[i].begin(), c.sets[i].end());
        amenable[c.indices[i]] = c.amenable[i];
    }
    return versioned({{"host", host}, {"sets", sets}, {"amenable", amenable}});
}

Cover cover_from_json(const Json& j) {
    return guarded("cover", [&] {
        Cover c;
        for (const auto& [k, v] : j.at("sets").items()) {
            c.indices.push_back(k);
            auto members = v.get<std::vector<std::string>>();
            c.sets.emplace_back(members.begin(), members.end());
            bool flag = false;
            if (j.contains("amenable") && j.at("amenable").contains(k)) flag = j.at("amenable").at(k).get<bool>();
            c.amenable.push_back(flag);
        }
        return c;
    });
}

}  // namespace mcx::io
