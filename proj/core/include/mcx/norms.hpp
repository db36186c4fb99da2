#pragma once

#include "mcx/chain_complex.hpp"
#include "mcx/homology.hpp"
#include "mcx/multicomplex.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace mcx {

Rational l1_norm(const Chain& c);
Rational linf_norm(const Cochain& phi);
/// Maximum over the given basis; entries of `phi` outside it are ignored.
Rational linf_norm(const Cochain& phi, const std::vector<AlgebraicSimplex>& basis);

struct SeminormResult {
    Rational value;
    Chain representative;   // z - d b
    Chain bounding_chain;   // b
    Cochain certificate;    // cocycle with sup norm <= 1 and <phi, z> = value
    std::size_t pivots = 0;
};

/// min ||z - d b||_1 over rational (n+1)-chains b, solved exactly as a linear
/// program in variable-splitting form, together with an optimal dual cochain.
SeminormResult seminorm_l1(const ChainComplex& cc, const Chain& z);

struct VolumeResult {
    Rational value;
    Chain fundamental_cycle;
    SeminormResult detail;
};

/// l1-seminorm of the fundamental class in the reduced complex of this fixed
/// multicomplex. This is the simplicial seminorm of one complex, an upper
/// bound for the simplicial volume of a triangulated manifold, not equal to it
/// in general.
VolumeResult simplicial_volume(const Multicomplex& mc);

struct DualAudit {
    bool primal_feasible = false;   // representative - z is a boundary
    bool norm_matches = false;      // ||representative||_1 == value
    bool certificate_bounded = false;
    bool certificate_cocycle = false;
    bool pairing_matches = false;   // <phi, z> == value == <phi, representative>
    bool ok() const {
        return primal_feasible && norm_matches && certificate_bounded && certificate_cocycle && pairing_matches;
    }
};

/// Independent recheck of a seminorm result: everything is recomputed from
/// the complex, not taken from the solver.
DualAudit audit_seminorm(const ChainComplex& cc, const Chain& z, const SeminormResult& result);
bool dual_check(const ChainComplex& cc, const Chain& z);

struct BruteForceResult {
    Integer value;                 // best norm found (||z||_1 if nothing smaller exists in the region)
    Chain representative;
    bool exhaustive = true;        // false when the node budget ran out
    bool globally_optimal = false; // the bounded region contains every cycle of smaller norm
    std::size_t nodes = 0;

    /// "unknown" when the search was cut short.
    std::optional<Integer> known_value() const {
        if (!exhaustive) return std::nullopt;
        return value;
    }
};

/// Minimum l1-norm of an integral cycle homologous to z over Z. Candidates w
/// are enumerated by increasing norm with |w_i| <= coeff_bound and at most
/// support_bound nonzero entries; w - z is tested for membership in the
/// integral image of d_{n+1} via the Smith form.
BruteForceResult integral_seminorm_bruteforce(const ChainComplex& cc, const Chain& z, int coeff_bound,
                                              int support_bound, std::size_t node_budget = 50'000'000);

}  // namespace mcx
