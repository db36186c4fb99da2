#pragma once

#include "mcx/chain.hpp"
#include "mcx/linalg.hpp"
#include "mcx/multicomplex.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mcx {

/// Labelled graded bases with integer boundary matrices, degrees 0..top.
///
/// `truncated()` is true when the underlying object has generators above
/// `top_degree()`; homology is then only meaningful strictly below the top.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::string label, std::vector<std::vector<AlgebraicSimplex>> bases,
                 std::vector<SparseIntMatrix> boundaries, bool truncated);

    const std::string& label() const { return label_; }
    int top_degree() const { return static_cast<int>(bases_.size()) - 1; }
    bool truncated() const { return truncated_; }

    const std::vector<AlgebraicSimplex>& basis(int n) const;
    std::size_t rank(int n) const { return basis(n).size(); }
    std::optional<std::size_t> index_of(int n, const AlgebraicSimplex& s) const;

    /// d_n : C_n -> C_{n-1}; the zero map with no rows for n = 0.
    const SparseIntMatrix& boundary_matrix(int n) const;

    /// Coefficient vector of `c` in the basis of its degree; ReferenceError on
    /// terms outside the basis.
    std::vector<Rational> coordinates(const Chain& c) const;
    Chain chain_from(int n, const std::vector<Rational>& coords, Ring ring = Ring::rationals) const;
    Cochain cochain_from(int n, const std::vector<Rational>& coords) const;
    std::vector<Rational> cochain_coordinates(const Cochain& phi) const;

    bool contains(const Chain& c) const;
    bool satisfies_dd_zero() const;

private:
    std::string label_;
    std::vector<std::vector<AlgebraicSimplex>> bases_;
    std::vector<std::map<AlgebraicSimplex, std::size_t>> index_;
    std::vector<SparseIntMatrix> boundaries_;  // boundaries_[n] is d_n
    bool truncated_ = false;
    SparseIntMatrix empty_;
};

/// Generators of the full complex. `covering` takes every tuple whose entries
/// cover the simplex's vertex set, repeats included; this complex has
/// generators in every degree, so it is always truncated. `distinct` keeps only
/// the (n+1)! orderings of each n-simplex, a subcomplex.
enum class FullBasis { distinct, covering };

/// All (sigma, (v0..vn)) of the chosen kind. `max_degree` < 0 means the
/// dimension of `mc`, plus one for `covering`.
ChainComplex build_full_chain_complex(const Multicomplex& mc, int max_degree = -1,
                                      FullBasis kind = FullBasis::distinct);

/// One generator per simplex: its tuple in increasing vertex order.
ChainComplex build_reduced_chain_complex(const Multicomplex& mc, int max_degree = -1);

/// p_*: full chains to reduced chains (sign of the sorting permutation,
/// repeated vertices map to zero).
Chain project(const Chain& c);
/// s_*: the canonical representative of each reduced generator.
Chain section(const Chain& c);

/// The quotient C(K)/C(L) for a facet-closed set of simplex ids L.
ChainComplex build_relative_complex(const Multicomplex& k, const std::set<std::string>& l, int max_degree = -1,
                                    bool reduced = false, FullBasis kind = FullBasis::distinct);

/// d applied to a chain; degree 0 gives the zero chain of degree 0.
Chain boundary(const ChainComplex& cc, const Chain& c);
/// delta phi = phi o d.
Cochain coboundary(const ChainComplex& cc, const Cochain& phi);

/// Boundary formula applied symbolically, without a prebuilt complex.
Chain boundary(const Multicomplex& mc, const Chain& c);

AlgebraicSimplex canonical_simplex(const Multicomplex& mc, SimplexIndex s);

}  // namespace mcx
