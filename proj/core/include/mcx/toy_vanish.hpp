#pragma once

#include "mcx/actions.hpp"
#include "mcx/chain.hpp"
#include "mcx/diffusion.hpp"
#include "mcx/error.hpp"

#include <string>
#include <vector>

namespace mcx {

/// Raised when a hypothesis of the vanishing pipeline fails.
class ToyVanishError : public DomainError {
public:
    ToyVanishError(std::string stage, std::string message, std::string element = {}, bool negates_class = false)
        : DomainError(message), stage(std::move(stage)), element(std::move(element)), negates_class(negates_class) {}

    std::string stage;    // "odd-reordering" or "class-preservation"
    std::string element;  // offending group element, if any
    bool negates_class;   // [g.z] = -[z] was verified
};

struct ToyVanishResult {
    Chain alternated;                     // alt(z)
    Chain diffused;                       // c'
    std::vector<std::vector<AlgebraicSimplex>> orbits;
    std::vector<Measure> measures;        // one per orbit, in processing order
    Measure combined;                     // mu_s * ... * mu_1
    Rational eta;
    /// Simplices of supp(alt z) with no element reordering them by an odd
    /// permutation; when nonempty the weaker orbit-sum condition was used.
    std::vector<AlgebraicSimplex> without_odd_reordering;
    Chain bounding_chain;                 // B with dB = c' - z
    bool certificate_verified = false;
};

/// Diffuses a rational cycle of the full chain complex to norm <= eps within
/// its homology class, following the orbit-by-orbit scheme with budget
/// eps / (number of orbits). The homotopy hypothesis on the group is replaced
/// by the checkable consequence [g.z] = [z] for every element g.
ToyVanishResult toy_vanish(const GroupAction& a, const Chain& z, const Rational& eps);

/// Convolution of measures on a finite group: (mu * nu)(g) = sum_{ab = g} mu(a) nu(b).
Measure convolve_measures(const GroupModel& g, const Measure& mu, const Measure& nu);

}  // namespace mcx
