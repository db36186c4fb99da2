#pragma once

#include "mcx/chain.hpp"
#include "mcx/group.hpp"
#include "mcx/multicomplex.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mcx {

/// A finite group acting on a multicomplex by one simplicial map per element.
///
/// Construction resolves every id (ReferenceError otherwise) but accepts maps
/// that violate the axioms so that `validate_action` can report them.
class GroupAction {
public:
    GroupAction() = default;
    GroupAction(std::shared_ptr<const Multicomplex> complex, FiniteGroup group, std::vector<SimplicialMap> maps);

    /// The action where every element acts as the identity.
    static GroupAction trivial(std::shared_ptr<const Multicomplex> complex, FiniteGroup group);

    const Multicomplex& complex() const { return *complex_; }
    std::shared_ptr<const Multicomplex> complex_ptr() const { return complex_; }
    const FiniteGroup& group() const { return group_; }
    const std::vector<SimplicialMap>& maps() const { return maps_; }
    const SimplicialMap& map(FiniteGroup::Element g) const { return maps_.at(g); }

    VertexIndex act_vertex(FiniteGroup::Element g, VertexIndex v) const { return vertex_image_[g][v]; }
    SimplexIndex act_simplex(FiniteGroup::Element g, SimplexIndex s) const { return simplex_image_[g][s]; }
    AlgebraicSimplex act(FiniteGroup::Element g, const AlgebraicSimplex& s) const;

private:
    std::shared_ptr<const Multicomplex> complex_;
    FiniteGroup group_;
    std::vector<SimplicialMap> maps_;
    std::vector<std::vector<VertexIndex>> vertex_image_;
    std::vector<std::vector<SimplexIndex>> simplex_image_;
};

/// Rules: "group", "automorphism", "homomorphism".
ValidationReport validate_action(const GroupAction& a);

bool is_zero_trivial(const GroupAction& a);

struct Quotient {
    Multicomplex complex;
    SimplicialMap projection;
};

/// K / Gamma for a 0-trivial action. Orbit ids are the least member id.
Quotient quotient(const GroupAction& a);

struct OrbitPartition {
    int degree = 0;
    std::vector<std::vector<AlgebraicSimplex>> orbits;  // each sorted; orbits sorted by first member
};

/// Orbits of the degree-k algebraic simplices with distinct vertices.
OrbitPartition orbits(const GroupAction& a, int k);
/// Orbits of the given algebraic simplices (the set must be invariant).
OrbitPartition orbits_of(const GroupAction& a, const std::vector<AlgebraicSimplex>& simplices);

Chain act_on_chain(const GroupAction& a, FiniteGroup::Element g, const Chain& c);
Cochain act_on_cochain(const GroupAction& a, FiniteGroup::Element g, const Cochain& phi);

/// A(phi)(s) = 1/|Gamma| sum_g phi(g^-1 s).
Cochain average_cochain(const GroupAction& a, const Cochain& phi);
bool is_invariant(const GroupAction& a, const Cochain& phi);

}  // namespace mcx
