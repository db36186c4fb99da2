#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcx {

using VertexIndex = std::uint32_t;
using SimplexIndex = std::uint32_t;
inline constexpr SimplexIndex kNoSimplex = std::numeric_limits<SimplexIndex>::max();

/// File-level description of one simplex: facets are keyed by the comma-joined
/// sorted vertex names of the facet's vertex set.
struct RawSimplex {
    std::string id;
    std::vector<std::string> vertices;
    std::map<std::string, std::string> facets;

    bool operator==(const RawSimplex&) const = default;
};

struct RawMulticomplex {
    std::vector<std::string> vertices;
    std::vector<RawSimplex> simplices;

    bool operator==(const RawMulticomplex&) const = default;
};

/// Comma-joined names; callers pass names already in the global (lexicographic) order.
std::string subset_key(std::span<const std::string> names);
std::vector<std::string> split_subset_key(std::string_view key);

struct Simplex {
    std::string id;
    std::vector<VertexIndex> vertices;  // ascending in the global vertex order
    std::vector<SimplexIndex> facets;   // facets[i] is opposite vertices[i]; kNoSimplex if missing

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

struct Violation {
    std::string rule;
    std::vector<std::string> subjects;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(std::string_view rule) const;
    void add(std::string rule, std::vector<std::string> subjects, std::string message);
};

/// A finite multicomplex (V, I, Omega).
///
/// Vertices are opaque strings kept in lexicographic order; that order is the
/// auxiliary total order used by every sign convention in the library. Only
/// codimension-one boundary maps are stored; deeper faces are obtained by
/// composing them, which `validate` checks is independent of the route.
///
/// Instances are immutable once built. `from_raw` rejects input whose
/// identifiers do not resolve; axiom violations are left for `validate`.
class Multicomplex {
public:
    Multicomplex() = default;

    static Multicomplex from_raw(const RawMulticomplex& raw);
    RawMulticomplex to_raw() const;

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::optional<VertexIndex> find_vertex(std::string_view name) const;
    VertexIndex vertex_index(std::string_view name) const;
    const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }

    std::size_t size() const { return simplices_.size(); }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(SimplexIndex s) const { return simplices_.at(s); }
    std::optional<SimplexIndex> find(std::string_view id) const;
    SimplexIndex index_of(std::string_view id) const;
    const std::string& id(SimplexIndex s) const { return simplices_.at(s).id; }

    /// Largest simplex dimension, or -1 when there are no simplices.
    int dimension() const;
    std::vector<SimplexIndex> simplices_of_dimension(int d) const;
    std::size_t count(int d) const;

    /// The set I_A for a sorted vertex set A.
    std::span<const SimplexIndex> with_vertex_set(const std::vector<VertexIndex>& sorted) const;
    /// The 0-simplex of a vertex, if exactly one exists.
    std::optional<SimplexIndex> vertex_simplex(VertexIndex v) const;

    /// Face of `s` opposite to one of its vertices.
    SimplexIndex facet_opposite(SimplexIndex s, VertexIndex v) const;
    /// Face of `s` with the given sorted vertex subset, obtained by composing facet maps.
    SimplexIndex face(SimplexIndex s, std::span<const VertexIndex> subset) const;
    /// All faces of `s` (including `s`), one per nonempty vertex subset.
    std::vector<SimplexIndex> faces(SimplexIndex s) const;

    std::vector<std::string> vertex_names(SimplexIndex s) const;

    /// Ids of input simplices whose vertex list repeated a vertex (deduplicated on load).
    const std::vector<std::string>& repeated_vertex_simplices() const { return duplicate_vertex_simplices_; }

private:
    std::vector<std::string> vertices_;
    std::map<std::string, VertexIndex, std::less<>> vertex_lookup_;
    std::vector<Simplex> simplices_;
    std::map<std::string, SimplexIndex, std::less<>> simplex_lookup_;
    std::map<std::vector<VertexIndex>, std::vector<SimplexIndex>> by_vertex_set_;
    std::vector<std::string> duplicate_vertex_simplices_;
};

/// Incremental construction with readable ids. `vertex` creates a vertex
/// together with its 0-simplex (same id); `simplex` derives the vertex set as
/// the union of the given facets.
class MulticomplexBuilder {
public:
    MulticomplexBuilder& vertex(const std::string& name);
    MulticomplexBuilder& vertex(const std::string& name, const std::string& simplex_id);
    MulticomplexBuilder& simplex(const std::string& id, const std::vector<std::string>& facet_ids);
    bool contains(const std::string& id) const { return vertex_sets_.count(id) != 0; }

    const RawMulticomplex& raw() const { return raw_; }
    Multicomplex build() const { return Multicomplex::from_raw(raw_); }

private:
    RawMulticomplex raw_;
    std::map<std::string, std::vector<std::string>> vertex_sets_;
};

/// Reports every violated multicomplex axiom. Rules: "singleton",
/// "distinct-vertices", "facet-missing", "facet-vertex-set", "composition".
ValidationReport validate(const Multicomplex& mc);

/// Throws DomainError listing the violations when `mc` is not a multicomplex.
void require_valid(const Multicomplex& mc, std::string_view context);

struct SimplicialMap {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> simplex_map;

    bool operator==(const SimplicialMap&) const = default;
};

struct MapReport {
    ValidationReport report;
    bool non_degenerate = false;
    bool injective = false;
    bool surjective = false;

    bool ok() const { return report.ok(); }
};

/// Checks that `f` is a simplicial map K -> K'. Throws ReferenceError when an
/// entry names a vertex or simplex that does not exist. Rules: "total",
/// "vertex-set", "facet-commutation".
MapReport validate_simplicial_map(const SimplicialMap& f, const Multicomplex& source,
                                  const Multicomplex& target);

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const Multicomplex& mc);

}  // namespace mcx
