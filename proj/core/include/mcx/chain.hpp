#pragma once

#include "mcx/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcx {

/// (sigma, (v0, ..., vn)): a simplex id with an ordering of its vertices.
struct AlgebraicSimplex {
    std::string simplex;
    std::vector<std::string> vertices;

    int degree() const { return static_cast<int>(vertices.size()) - 1; }
    bool has_repeats() const;

    auto operator<=>(const AlgebraicSimplex&) const = default;
    bool operator==(const AlgebraicSimplex&) const = default;
};

std::string to_string(const AlgebraicSimplex& s);

/// Sparse linear combination of algebraic simplices of one degree. Zero
/// coefficients are never stored; in the integer ring every coefficient is
/// integral.
template <class Tag>
class LinearCombination {
public:
    using Terms = std::map<AlgebraicSimplex, Rational>;

    explicit LinearCombination(int degree = 0, Ring ring = Ring::rationals) : degree_(degree), ring_(ring) {}

    int degree() const { return degree_; }
    Ring ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const AlgebraicSimplex& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const AlgebraicSimplex& s, const Rational& value);
    void set(const AlgebraicSimplex& s, const Rational& value);

    /// Reinterprets the coefficients in another ring (integrality is checked).
    LinearCombination with_ring(Ring ring) const;

    LinearCombination& operator+=(const LinearCombination& other);
    LinearCombination& operator-=(const LinearCombination& other);
    LinearCombination& operator*=(const Rational& factor);

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& q, LinearCombination a) { return a *= q; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }

    /// Equal terms and degree; the ring tag is ignored.
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check(const AlgebraicSimplex& s, const Rational& value) const;

    int degree_;
    Ring ring_;
    Terms terms_;
};

struct ChainTag;
struct CochainTag;
using Chain = LinearCombination<ChainTag>;
using Cochain = LinearCombination<CochainTag>;

extern template class LinearCombination<ChainTag>;
extern template class LinearCombination<CochainTag>;

/// Kronecker pairing <phi, c>.
Rational pairing(const Cochain& phi, const Chain& c);

/// Sign of the permutation sorting `tuple` increasingly; 0 if it has repeats.
int sort_sign(std::vector<std::string>& tuple);

/// alt(sigma,(v0..vk)) = 1/(k+1)! sum_tau sign(tau) (sigma,(v_tau(0)..v_tau(k))).
Chain alternate(const Chain& c);
Cochain alternate(const Cochain& phi);

/// True if every coefficient flips sign under transpositions of the tuple.
bool is_alternating(const Chain& c);
bool is_alternating(const Cochain& phi);

}  // namespace mcx
