#pragma once

#include "mcx/actions.hpp"
#include "mcx/chain.hpp"
#include "mcx/multicomplex.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mcx {

/// A family of vertex subsets of a host complex, indexed by strings.
struct Cover {
    std::vector<std::string> indices;
    std::vector<std::set<std::string>> sets;
    std::vector<bool> amenable;  // reported, never interpreted

    std::size_t size() const { return indices.size(); }
    std::size_t position(const std::string& index) const;
};

/// Vertices are the indices of nonempty members; one simplex per set of
/// members with a common point, up to `max_dim` (negative: no limit).
Multicomplex nerve(const Cover& c, int max_dim = -1);

/// Largest number of distinct members sharing a point.
std::size_t multiplicity(const Cover& c);

using Coloring = std::map<std::string, std::string>;  // vertex -> cover index

/// j(v) = least index (in cover order) whose member contains the closed star
/// of v; DomainError naming the vertex when there is none.
Coloring coloring_adapted(const Multicomplex& host, const Cover& c);

struct ColorWitness {
    std::string element;
    std::string first, second;  // vertices of the simplex sharing a color
};

struct VanishingReport {
    struct Entry {
        AlgebraicSimplex simplex;
        Rational value;
    };
    std::vector<Entry> checked;              // witnessed simplices with repeated colors
    std::vector<std::string> unwitnessed;    // repeated colors but no witness
    std::vector<std::string> unconstrained;  // all colors distinct
    std::vector<std::string> failures;       // invariance or vanishing failed

    bool ok() const { return failures.empty(); }
};

/// Checks that phi vanishes on every algebraic simplex whose simplex has a
/// witnessed repeated color. Invalid witnesses raise DomainError.
VanishingReport check_repeated_color_vanishing(const Cochain& phi, const GroupAction& a, const Coloring& coloring,
                                               const std::map<std::string, ColorWitness>& witnesses);

}  // namespace mcx
