#pragma once

#include "mcx/chain_complex.hpp"
#include "mcx/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mcx {

struct HomologyGenerator {
    Chain cycle;
    Integer order;  // 0 for a free generator
};

struct HomologyDegree {
    int degree = 0;
    std::size_t cycles_rank = 0;      // dim Z_n
    std::size_t boundaries_rank = 0;  // rank of d_{n+1}
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;     // invariant factors >= 2
    std::vector<HomologyGenerator> generators;
};

/// Homology of a chain complex in degrees 0..max, with the data needed to
/// decide boundary membership and to produce bounding chains.
class HomologyResult {
public:
    Ring ring() const { return ring_; }
    const ChainComplex& complex() const { return *complex_; }
    const std::vector<HomologyDegree>& degrees() const { return degrees_; }
    const HomologyDegree& degree(int n) const;
    int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    std::vector<std::size_t> betti() const;

    bool is_cycle(const Chain& z) const;
    bool is_boundary(const Chain& z) const;
    bool are_homologous(const Chain& a, const Chain& b) const;
    /// Some b with d b = z over the result's ring, or nothing.
    std::optional<Chain> bounding_chain(const Chain& z) const;

private:
    friend HomologyResult homology(const ChainComplex& cc, Ring ring, int max_degree);

    Ring ring_ = Ring::rationals;
    std::shared_ptr<const ChainComplex> complex_;
    std::vector<HomologyDegree> degrees_;
    // Solvers for d_{n+1}, indexed by n.
    std::vector<std::shared_ptr<const RationalSolver>> rational_;
    std::vector<std::shared_ptr<const IntegerSolver>> integral_;
};

/// Homology in degrees 0..max_degree (default: every degree the complex
/// determines, i.e. below the top when it is truncated).
HomologyResult homology(const ChainComplex& cc, Ring ring, int max_degree = -1);

struct FundamentalCycle {
    std::optional<Chain> cycle;  // reduced basis, integer coefficients
    std::string diagnostic;
};

/// A generator of H_n(mc; Z) when that group is infinite cyclic; the first
/// nonzero coefficient (in basis order) is positive.
FundamentalCycle fundamental_cycle(const Multicomplex& mc, int n);

}  // namespace mcx
