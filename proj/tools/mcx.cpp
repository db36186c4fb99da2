#include "mcx/actions.hpp"
#include "mcx/chain_complex.hpp"
#include "mcx/constructions.hpp"
#include "mcx/covers.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/error.hpp"
#include "mcx/fixtures.hpp"
#include "mcx/homology.hpp"
#include "mcx/io.hpp"
#include "mcx/norms.hpp"
#include "mcx/toy_vanish.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace mcx;
using io::Json;

namespace {

enum class Output { json, summary };

struct Options {
    Output output = Output::json;
};

// A loaded document plus the directory used to resolve relative references.
struct Document {
    Json json;
    fs::path base;
};

Document load(const std::string& path) {
    std::stringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
        return {io::parse(ss.str()), fs::current_path()};
    }
    std::ifstream in(path);
    if (!in) throw ReferenceError("cannot open '" + path + "'");
    ss << in.rdbuf();
    return {io::parse(ss.str()), fs::path(path).parent_path()};
}

// A field holding either an inline object or a path relative to the document.
Document resolve(const Document& doc, const Json& field) {
    if (field.is_string()) {
        fs::path p = field.get<std::string>();
        if (p.is_relative()) p = doc.base / p;
        return load(p.string());
    }
    return {field, doc.base};
}

void require_ok(const ValidationReport& r, const std::string& context) {
    if (r.ok()) return;
    std::string msg = context + ":";
    for (const auto& v : r.violations) msg += " [" + v.rule + "] " + v.message;
    throw DomainError(msg);
}

Json strip(Json j) {
    j.erase("schema_version");
    return j;
}

Json versioned(Json body) {
    Json out = {{"schema_version", io::kSchemaVersion}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return out;
}

Json map_json(const SimplicialMap& f) {
    Json vm = Json::object(), sm = Json::object();
    for (const auto& [k, v] : f.vertex_map) vm[k] = v;
    for (const auto& [k, v] : f.simplex_map) sm[k] = v;
    return {{"vertex_map", vm}, {"simplex_map", sm}};
}

Json simplices_json(const std::vector<AlgebraicSimplex>& list) {
    Json out = Json::array();
    for (const auto& s : list) out.push_back({{"simplex", s.simplex}, {"vertices", s.vertices}});
    return out;
}

void emit(const Options& opt, const Json& j, const std::string& summary) {
    if (opt.output == Output::json) {
        std::cout << io::dump(j);
        std::cerr << summary << '\n';
    } else {
        std::cout << summary << '\n';
    }
}

Multicomplex load_complex(const std::string& path) { return io::multicomplex_from_json(load(path).json); }

GroupAction load_action(const std::string& path) {
    Document doc = load(path);
    if (!doc.json.contains("complex")) throw ReferenceError("action needs a \"complex\" field");
    auto mc = std::make_shared<const Multicomplex>(io::multicomplex_from_json(resolve(doc, doc.json.at("complex")).json));
    return io::action_from_json(doc.json, mc);
}

struct LoadedCover {
    Cover cover;
    Multicomplex host;
};

LoadedCover load_cover(const std::string& path) {
    Document doc = load(path);
    Cover c = io::cover_from_json(doc.json);
    if (!doc.json.contains("host")) throw ReferenceError("cover needs a \"host\" field");
    return {c, io::multicomplex_from_json(resolve(doc, doc.json.at("host")).json)};
}

ChainComplex complex_for(const Multicomplex& mc, const std::string& variant, int max_degree) {
    if (variant == "reduced" || variant == "alternating") return build_reduced_chain_complex(mc, max_degree);
    if (variant == "full") return build_full_chain_complex(mc, max_degree, FullBasis::covering);
    if (variant == "full-distinct") return build_full_chain_complex(mc, max_degree, FullBasis::distinct);
    throw DomainError("unknown variant '" + variant + "'");
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

Json diffusion_json(const GroupModel& g, const DiffusionResult& r) {
    Json phi = Json::array();
    for (const auto& e : r.phi) phi.push_back(g.key(e));
    return versioned({{"measure", strip(io::measure_to_json(g, r.mu))},
                      {"result", io::to_json(r.f)},
                      {"base_point", r.base_point},
                      {"phi", phi},
                      {"derivative", to_string(r.derivative)},
                      {"bound", to_string(r.bound)},
                      {"input_norm", to_string(r.input_norm)},
                      {"output_norm", to_string(r.output_norm)}});
}

// {group: "Z^d" | finite group, function, epsilon, [points, images]}.
// A finite group without images acts on itself by left multiplication.
ActionOnSet diffusion_action(const Json& j) {
    GroupModel g = io::group_model_from_json(j.at("group"));
    if (!g.is_finite()) {
        std::vector<Point> window;
        if (j.contains("points")) window = j.at("points").get<std::vector<Point>>();
        return translation_action(g.rank(), window);
    }
    const FiniteGroup& fg = g.finite_group();
    std::vector<Point> points;
    std::vector<std::map<Point, Point>> images(fg.order());
    if (j.contains("images")) {
        points = j.at("points").get<std::vector<Point>>();
        for (FiniteGroup::Element e = 0; e < fg.order(); ++e)
            images[e] = j.at("images").at(fg.name(e)).get<std::map<Point, Point>>();
    } else {
        for (FiniteGroup::Element e = 0; e < fg.order(); ++e) points.push_back(fg.name(e));
        for (FiniteGroup::Element e = 0; e < fg.order(); ++e)
            for (FiniteGroup::Element x = 0; x < fg.order(); ++x) images[e][fg.name(x)] = fg.name(fg.multiply(e, x));
    }
    return table_action(fg, points, images);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multicomplexes, chain complexes, l1 seminorms and diffusion"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::map<std::string, Output> output_names{{"json", Output::json}, {"summary", Output::summary}};
    app.add_option("--output", opt.output, "json (stdout) or summary")
        ->transform(CLI::CheckedTransformer(output_names, CLI::ignore_case));

    std::string input;
    std::function<int()> action;
    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", input, "input file (stdin when omitted)");
        return sub;
    };

    auto* validate_cmd = add("validate", "check the multicomplex axioms");
    validate_cmd->callback([&] {
        action = [&] {
            ValidationReport r = validate(load_complex(input));
            std::string summary = r.ok() ? "valid" : std::to_string(r.violations.size()) + " violation(s)";
            for (const auto& v : r.violations) summary += "\n  " + v.rule + ": " + v.message;
            emit(opt, io::to_json(r), summary);
            return r.ok() ? 0 : 1;
        };
    });

    int dim = 0;
    auto* skeleton_cmd = add("skeleton", "n-skeleton");
    skeleton_cmd->add_option("--dim", dim)->required();
    skeleton_cmd->callback([&] {
        action = [&] {
            Multicomplex s = skeleton(load_complex(input), dim);
            emit(opt, io::to_json(s), std::to_string(s.size()) + " simplices");
            return 0;
        };
    });

    std::vector<std::string> labels;
    auto* sphere_cmd = app.add_subcommand("sphere", "special sphere with two n-simplices");
    sphere_cmd->add_option("--dim", dim)->required();
    sphere_cmd->add_option("--labels", labels)->delimiter(',');
    sphere_cmd->callback([&] {
        action = [&] {
            Multicomplex s = labels.empty() ? special_sphere(dim) : special_sphere(dim, labels);
            emit(opt, io::to_json(s), "special sphere of dimension " + std::to_string(dim));
            return 0;
        };
    });

    auto* product_cmd = add("product", "K x I");
    product_cmd->callback([&] {
        action = [&] {
            ProductWithInterval p = product_with_interval(load_complex(input));
            Json j = versioned({{"product", strip(io::to_json(p.product))}, {"i0", map_json(p.i0)}, {"i1", map_json(p.i1)}});
            emit(opt, j, std::to_string(p.product.size()) + " simplices");
            return 0;
        };
    });

    std::string ring = "q", variant = "reduced";
    std::vector<std::string> sub_ids;
    int max_degree = -1;
    auto* homology_cmd = add("homology", "simplicial homology");
    homology_cmd->add_option("--ring", ring)->check(CLI::IsMember({"z", "q"}));
    homology_cmd->add_option("--variant", variant)
        ->check(CLI::IsMember({"full", "full-distinct", "reduced", "alternating", "relative"}));
    homology_cmd->add_option("--sub", sub_ids, "simplex ids of L (relative variant)");
    homology_cmd->add_option("--max-degree", max_degree);
    homology_cmd->callback([&] {
        action = [&] {
            Multicomplex mc = load_complex(input);
            require_valid(mc, "homology");
            Ring r = ring == "z" ? Ring::integers : Ring::rationals;
            ChainComplex cc = variant == "relative"
                                  ? build_relative_complex(mc, {sub_ids.begin(), sub_ids.end()}, max_degree, true)
                                  : complex_for(mc, variant, max_degree);
            HomologyResult h = homology(cc, r);
            Json j = io::to_json(h);
            j["variant"] = variant;
            emit(opt, j, "betti " + join(h.betti()));
            return 0;
        };
    });

    std::string complex_path;
    auto chain_input = [&](CLI::App* sub) {
        sub->add_option("--complex", complex_path, "multicomplex file")->required();
        sub->add_option("--variant", variant)->check(CLI::IsMember({"full", "full-distinct", "reduced"}));
    };
    auto seminorm_setup = [&](int extra) {
        Multicomplex mc = load_complex(complex_path);
        require_valid(mc, "seminorm");
        Chain z = io::chain_from_json(load(input).json);
        if (variant == "reduced") z = project(z);
        ChainComplex cc = complex_for(mc, variant, z.degree() + extra);
        return std::pair{std::move(cc), std::move(z)};
    };

    auto* seminorm_cmd = add("seminorm", "exact l1 seminorm of a cycle");
    chain_input(seminorm_cmd);
    seminorm_cmd->callback([&] {
        action = [&] {
            auto [cc, z] = seminorm_setup(1);
            SeminormResult r = seminorm_l1(cc, z.with_ring(Ring::rationals));
            emit(opt, io::to_json(r), "seminorm " + to_string(r.value));
            return 0;
        };
    });

    auto* dual_cmd = add("dual", "seminorm with an audited dual certificate");
    chain_input(dual_cmd);
    dual_cmd->callback([&] {
        action = [&] {
            auto [cc, z] = seminorm_setup(1);
            Chain zq = z.with_ring(Ring::rationals);
            SeminormResult r = seminorm_l1(cc, zq);
            DualAudit a = audit_seminorm(cc, zq, r);
            Json j = versioned({{"value", to_string(r.value)},
                                {"certificate", strip(io::to_json(r.certificate))},
                                {"primal_feasible", a.primal_feasible},
                                {"norm_matches", a.norm_matches},
                                {"certificate_bounded", a.certificate_bounded},
                                {"certificate_cocycle", a.certificate_cocycle},
                                {"pairing_matches", a.pairing_matches},
                                {"zero_gap", a.ok()}});
            emit(opt, j, std::string(a.ok() ? "zero duality gap" : "audit failed") + ", value " + to_string(r.value));
            return a.ok() ? 0 : 3;
        };
    });

    int coeff_bound = 3, support_bound = 4;
    std::size_t budget = 2000000;
    auto* int_cmd = add("int-seminorm", "integral seminorm by bounded enumeration");
    chain_input(int_cmd);
    int_cmd->add_option("--coeff-bound", coeff_bound);
    int_cmd->add_option("--support-bound", support_bound);
    int_cmd->add_option("--budget", budget);
    int_cmd->callback([&] {
        action = [&] {
            auto [cc, z] = seminorm_setup(1);
            BruteForceResult r = integral_seminorm_bruteforce(cc, z.with_ring(Ring::integers), coeff_bound,
                                                              support_bound, budget);
            auto known = r.known_value();
            emit(opt, io::to_json(r), "integral seminorm " + (known ? to_string(*known) : "unknown (best " + to_string(r.value) + ")"));
            return 0;
        };
    });

    auto* volume_cmd = add("volume", "seminorm of the fundamental class");
    volume_cmd->callback([&] {
        action = [&] {
            VolumeResult v = simplicial_volume(load_complex(input));
            Json j = versioned({{"value", to_string(v.value)},
                                {"fundamental_cycle", strip(io::to_json(v.fundamental_cycle))},
                                {"detail", strip(io::to_json(v.detail))}});
            emit(opt, j, "volume " + to_string(v.value));
            return 0;
        };
    });

    auto* quotient_cmd = add("quotient", "K / Gamma for a 0-trivial action");
    quotient_cmd->callback([&] {
        action = [&] {
            GroupAction a = load_action(input);
            require_ok(validate_action(a), "quotient");
            Quotient q = quotient(a);
            Json j = versioned({{"complex", strip(io::to_json(q.complex))}, {"projection", map_json(q.projection)}});
            emit(opt, j, std::to_string(q.complex.size()) + " simplices in the quotient");
            return 0;
        };
    });

    int degree = 0;
    auto* orbits_cmd = add("orbits", "orbits of degree-k algebraic simplices");
    orbits_cmd->add_option("--degree", degree)->required();
    orbits_cmd->callback([&] {
        action = [&] {
            OrbitPartition p = orbits(load_action(input), degree);
            Json list = Json::array();
            for (const auto& o : p.orbits) list.push_back(simplices_json(o));
            emit(opt, versioned({{"degree", p.degree}, {"orbits", list}}), std::to_string(p.orbits.size()) + " orbits");
            return 0;
        };
    });

    std::string cochain_path;
    auto* average_cmd = add("average", "average a cochain over the group");
    average_cmd->add_option("--cochain", cochain_path)->required();
    average_cmd->callback([&] {
        action = [&] {
            GroupAction a = load_action(input);
            Cochain phi = average_cochain(a, io::cochain_from_json(load(cochain_path).json).with_ring(Ring::rationals));
            emit(opt, io::to_json(phi), std::to_string(phi.terms().size()) + " nonzero values");
            return 0;
        };
    });

    std::string eps_text;
    auto* diffuse_cmd = add("diffuse", "diffuse a finitely supported function");
    diffuse_cmd->add_option("--eps", eps_text, "overrides the problem's epsilon");
    diffuse_cmd->callback([&] {
        action = [&] {
            Json j = load(input).json;
            ActionOnSet a = diffusion_action(j);
            Rational eps = parse_rational(eps_text.empty() ? j.at("epsilon").get<std::string>() : eps_text);
            DiffusionResult r = diffuse_to_epsilon(a, io::function_from_json(j.at("function")), eps);
            emit(opt, diffusion_json(a.group, r),
                 "||mu*f||_1 = " + to_string(r.output_norm) + " <= " + to_string(r.bound));
            return 0;
        };
    });

    auto* local_cmd = add("local-diffuse", "orbit-by-orbit diffusion on a locally finite action");
    local_cmd->callback([&] {
        action = [&] {
            Json j = load(input).json;
            std::vector<fixtures::OrbitSpec> specs;
            for (const auto& o : j.at("orbits")) specs.push_back({o.at("kind").get<std::string>(), o.at("size").get<std::size_t>()});
            LocallyFiniteAction a = fixtures::orbit_family(specs);
            require_ok(validate_locally_finite(a), "local-diffuse");
            std::vector<Rational> eps;
            for (const auto& e : j.at("epsilons")) eps.push_back(parse_rational(e.get<std::string>()));
            auto r = local_diffuse(a, io::function_from_json(j.at("function")), eps, j.at("s_bar").get<std::size_t>());
            Json per = Json::array();
            for (std::size_t s = 0; s < r.sums_before.size(); ++s)
                per.push_back({{"orbit", s},
                               {"sum_before", to_string(r.sums_before[s])},
                               {"sum_after", to_string(r.sums_after[s])},
                               {"norm_before", to_string(r.norms_before[s])},
                               {"norm_after", to_string(r.norms_after[s])}});
            Json out = versioned({{"result", io::to_json(r.result)},
                                  {"orbits", per},
                                  {"disjointness_checked_on_enumerated_range_only",
                                   r.disjointness_checked_on_enumerated_range_only}});
            emit(opt, out, "||f'||_1 = " + to_string(l1_norm(r.result)));
            return 0;
        };
    });

    std::string action_path;
    auto* toy_cmd = add("toy-vanish", "diffuse a cycle to small norm within its class");
    toy_cmd->add_option("--action", action_path)->required();
    toy_cmd->add_option("--eps", eps_text)->required();
    toy_cmd->callback([&] {
        action = [&] {
            GroupAction a = load_action(action_path);
            require_ok(validate_action(a), "toy-vanish");
            Chain z = io::chain_from_json(load(input).json).with_ring(Ring::rationals);
            ToyVanishResult r = toy_vanish(a, z, parse_rational(eps_text));
            GroupModel g = GroupModel::finite(a.group());
            Json orbit_list = Json::array();
            for (const auto& o : r.orbits) orbit_list.push_back(simplices_json(o));
            Json out = versioned({{"alternated", strip(io::to_json(r.alternated))},
                                  {"diffused", strip(io::to_json(r.diffused))},
                                  {"norm", to_string(l1_norm(r.diffused))},
                                  {"eta", to_string(r.eta)},
                                  {"orbits", orbit_list},
                                  {"combined_measure", strip(io::measure_to_json(g, r.combined))},
                                  {"orbit_sum_fallback", simplices_json(r.without_odd_reordering)},
                                  {"bounding_chain", strip(io::to_json(r.bounding_chain))},
                                  {"certificate_verified", r.certificate_verified}});
            emit(opt, out, "||c'||_1 = " + to_string(l1_norm(r.diffused)));
            return 0;
        };
    });

    auto* nerve_cmd = add("nerve", "nerve of a cover");
    nerve_cmd->add_option("--max-dim", max_degree);
    nerve_cmd->callback([&] {
        action = [&] {
            Multicomplex n = nerve(load_cover(input).cover, max_degree);
            emit(opt, io::to_json(n), "nerve of dimension " + std::to_string(n.dimension()));
            return 0;
        };
    });

    auto* mult_cmd = add("mult", "multiplicity of a cover");
    mult_cmd->callback([&] {
        action = [&] {
            LoadedCover lc = load_cover(input);
            std::size_t m = multiplicity(lc.cover);
            int nerve_dim = nerve(lc.cover).dimension();
            emit(opt, versioned({{"mult", m}, {"nerve_dimension", nerve_dim}}), std::to_string(m));
            return 0;
        };
    });

    auto* coloring_cmd = add("coloring", "coloring adapted to a cover");
    coloring_cmd->callback([&] {
        action = [&] {
            LoadedCover lc = load_cover(input);
            Coloring c = coloring_adapted(lc.host, lc.cover);
            Json j = Json::object();
            for (const auto& [v, color] : c) j[v] = color;
            emit(opt, versioned({{"coloring", j}}), std::to_string(c.size()) + " vertices colored");
            return 0;
        };
    });

    std::string cover_path, witness_path;
    auto* vanish_cmd = add("vanish-check", "repeated-color vanishing of an invariant alternating cochain");
    vanish_cmd->add_option("--action", action_path)->required();
    vanish_cmd->add_option("--cover", cover_path)->required();
    vanish_cmd->add_option("--witnesses", witness_path, "{simplex: {element, first, second}}");
    vanish_cmd->callback([&] {
        action = [&] {
            GroupAction a = load_action(action_path);
            LoadedCover lc = load_cover(cover_path);
            Coloring coloring = coloring_adapted(a.complex(), lc.cover);
            std::map<std::string, ColorWitness> witnesses;
            if (!witness_path.empty()) {
                Json w = load(witness_path).json;
                try {
                    for (const auto& [id, v] : w.items())
                        witnesses[id] = {v.at("element").get<std::string>(), v.at("first").get<std::string>(),
                                         v.at("second").get<std::string>()};
                } catch (const Json::exception& e) {
                    throw ReferenceError(std::string("malformed witnesses: ") + e.what());
                }
            }
            Cochain phi = io::cochain_from_json(load(input).json).with_ring(Ring::rationals);
            VanishingReport r = check_repeated_color_vanishing(phi, a, coloring, witnesses);
            Json checked = Json::array();
            for (const auto& e : r.checked)
                checked.push_back({{"simplex", e.simplex.simplex}, {"vertices", e.simplex.vertices}, {"value", to_string(e.value)}});
            Json out = versioned({{"ok", r.ok()},
                                  {"checked", checked},
                                  {"unwitnessed", r.unwitnessed},
                                  {"unconstrained", r.unconstrained},
                                  {"failures", r.failures}});
            emit(opt, out, std::to_string(r.checked.size()) + " witnessed simplices checked, " +
                               std::to_string(r.failures.size()) + " failure(s)");
            return r.ok() ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const ToyVanishError& e) {
        std::cerr << "error (" << e.stage << (e.element.empty() ? "" : ", element " + e.element)
                  << (e.negates_class ? ", [g.z] = -[z]" : "") << "): " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ReferenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
