#pragma once

#include "mcx/actions.hpp"
#include "mcx/chain.hpp"
#include "mcx/covers.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/homology.hpp"
#include "mcx/multicomplex.hpp"
#include "mcx/norms.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <string_view>

/// JSON formats. Objects keep their key order, so files written here are
/// fixed points of parse followed by serialize. Every reader converts
/// malformed input into ReferenceError.
namespace mcx::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json parse(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json to_json(const RawMulticomplex& raw);
Json to_json(const Multicomplex& mc);
RawMulticomplex raw_multicomplex_from_json(const Json& j);
Multicomplex multicomplex_from_json(const Json& j);

Json to_json(const Chain& c);
Json to_json(const Cochain& phi);
Chain chain_from_json(const Json& j);
Cochain cochain_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const HomologyResult& h);
Json to_json(const SeminormResult& r);
Json to_json(const BruteForceResult& r);

/// {elements: [name...], table: [[name...]...]}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {elements, table, maps: {element: {vertex_map, simplex_map}}}
Json to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j, std::shared_ptr<const Multicomplex> mc);

/// "Z^d" for free abelian groups, otherwise the finite group object.
Json to_json(const GroupModel& g);
GroupModel group_model_from_json(const Json& j);

/// {group, weights: {element-key: "p/q"}}
Json measure_to_json(const GroupModel& g, const Measure& mu);
Measure measure_from_json(const Json& j, const GroupModel& g);

/// {point: "p/q"}
Json to_json(const SparseFunction& f);
SparseFunction function_from_json(const Json& j);

/// {host, sets: {index: [vertex...]}, amenable: {index: bool}}; member order
/// is the key order of `sets`. The host is returned untouched by the reader.
Json to_json(const Cover& c, const Json& host);
Cover cover_from_json(const Json& j);

}  // namespace mcx::io
