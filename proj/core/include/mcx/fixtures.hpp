#pragma once

#include "mcx/actions.hpp"
#include "mcx/chain_complex.hpp"
#include "mcx/covers.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/multicomplex.hpp"

#include <memory>

/// Small named complexes used by tests, benchmarks and the CLI.
namespace mcx::fixtures {

/// Simplicial circle: vertices a, b, c and edges "a,b", "a,c", "b,c".
Multicomplex boundary_triangle();
/// Simplicial 2-sphere: boundary of the tetrahedron on 0, 1, 2, 3.
Multicomplex boundary_tetrahedron();
/// Seven-vertex torus with triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
Multicomplex torus7();
/// Two vertices a, b joined by edges e1 and e2.
Multicomplex double_edge();
/// Cone with apex p over the double edge: edges e1, e2, "a,p", "b,p" and
/// triangles t1 (over e1) and t2 (over e2).
Multicomplex cone_over_double_edge();

/// A tetrahedron whose facets abc and abd use different edges over {a, b}:
/// the two routes to that edge disagree, so `validate` reports "composition".
Multicomplex broken_composition();

/// Simplicial circle on h0, ..., h5.
Multicomplex hexagon();
/// Arcs {h0,h1,h2}, {h2,h3,h4}, {h4,h5,h0} of the hexagon, indexed A, B, C.
Cover three_arc_cover();

/// Z/2 exchanging e1 and e2 (and t1, t2 when present), fixing every vertex.
GroupAction edge_swap(std::shared_ptr<const Multicomplex> mc);
/// Z/2 on the double edge exchanging a with b and e1 with e2.
GroupAction antipodal(std::shared_ptr<const Multicomplex> mc);

/// One orbit of a locally finite action: "Z" is the integers acting on
/// themselves by translation, enumerated on 0..size-1; "cyclic" is Z/size.
struct OrbitSpec {
    std::string kind;
    std::size_t size = 1;
};

/// Orbits Lambda_s with points "s:n"; Gamma_s moves only the points of its
/// own orbit, so every horizon is s + 1.
LocallyFiniteAction orbit_family(const std::vector<OrbitSpec>& specs);
/// Ten orbits alternating between Z (window 6) and Z/(s + 2).
LocallyFiniteAction ten_orbits();

/// A three-dimensional Delta-complex with a single vertex, two edges, two
/// triangles and one tetrahedron, obtained by identifying pairs of faces of a
/// tetrahedron with corners v0..v3 by cyclic relabellings. Algebraic
/// simplices are (cell, ordering of the cell's corners); the full complex
/// also contains orderings with repeated corners.
struct NoisogFixture {
    ChainComplex full;      // degrees 0..4, truncated
    ChainComplex reduced;   // one generator per cell
    Chain sigma;            // (D, (v0, v1, v2, v3)) in the reduced complex
    Chain full_cycle;       // an integral cycle of the full complex projecting to sigma
};

NoisogFixture noisog();

/// p_* for the noisog complex: full generators to reduced generators.
Chain noisog_project(const Chain& c);

}  // namespace mcx::fixtures
