#include "mcx/chain.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <set>

namespace mcx {

bool AlgebraicSimplex::has_repeats() const {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    return seen.size() != vertices.size();
}

std::string to_string(const AlgebraicSimplex& s) {
    std::string out = s.simplex + "(";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) out += (i ? "," : "") + s.vertices[i];
    return out + ")";
}

template <class Tag>
void LinearCombination<Tag>::check(const AlgebraicSimplex& s, const Rational& value) const {
    if (s.degree() != degree_)
        throw DomainError("algebraic simplex " + to_string(s) + " does not have degree " + std::to_string(degree_));
    if (ring_ == Ring::integers && !is_integral(value))
        throw DomainError("non-integral coefficient " + to_string(value) + " in an integer chain");
}

template <class Tag>
void LinearCombination<Tag>::add(const AlgebraicSimplex& s, const Rational& value) {
    check(s, value);
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, value);
    if (inserted) return;
    it->second += value;
    if (it->second == 0) terms_.erase(it);
}

template <class Tag>
void LinearCombination<Tag>::set(const AlgebraicSimplex& s, const Rational& value) {
    check(s, value);
    if (value == 0)
        terms_.erase(s);
    else
        terms_[s] = value;
}

template <class Tag>
LinearCombination<Tag> LinearCombination<Tag>::with_ring(Ring ring) const {
    LinearCombination out(degree_, ring);
    for (const auto& [s, q] : terms_) out.add(s, q);
    return out;
}

template <class Tag>
LinearCombination<Tag>& LinearCombination<Tag>::operator+=(const LinearCombination& other) {
    if (other.degree_ != degree_ && !other.is_zero())
        throw DomainError("adding chains of different degrees");
    for (const auto& [s, q] : other.terms_) add(s, q);
    return *this;
}

template <class Tag>
LinearCombination<Tag>& LinearCombination<Tag>::operator-=(const LinearCombination& other) {
    if (other.degree_ != degree_ && !other.is_zero())
        throw DomainError("subtracting chains of different degrees");
    for (const auto& [s, q] : other.terms_) add(s, -q);
    return *this;
}

template <class Tag>
LinearCombination<Tag>& LinearCombination<Tag>::operator*=(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    if (ring_ == Ring::integers && !is_integral(factor)) ring_ = Ring::rationals;
    for (auto& [s, q] : terms_) q *= factor;
    return *this;
}

template class LinearCombination<ChainTag>;
template class LinearCombination<CochainTag>;

Rational pairing(const Cochain& phi, const Chain& c) {
    if (phi.degree() != c.degree() && !phi.is_zero() && !c.is_zero())
        throw DomainError("pairing a cochain and a chain of different degrees");
    Rational sum = 0;
    const auto& small = phi.support_size() < c.support_size() ? phi.terms() : c.terms();
    const auto& large = phi.support_size() < c.support_size() ? c.terms() : phi.terms();
    for (const auto& [s, q] : small) {
        auto it = large.find(s);
        if (it != large.end()) sum += q * it->second;
    }
    return sum;
}

int sort_sign(std::vector<std::string>& tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    }
    if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) return 0;
    return sign;
}

namespace {

template <class T>
T alternate_impl(const T& c) {
    if (c.ring() != Ring::rationals) throw DomainError("alternation needs rational coefficients");
    T out(c.degree(), Ring::rationals);
    const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(c.degree() + 1)));
    for (const auto& [s, q] : c.terms()) {
        std::vector<std::size_t> perm(s.vertices.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
            int sign = 1;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            AlgebraicSimplex t{s.simplex, {}};
            for (auto i : perm) t.vertices.push_back(s.vertices[i]);
            out.add(t, sign * scale * q);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

template <class T>
bool is_alternating_impl(const T& c) {
    for (const auto& [s, q] : c.terms()) {
        for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
            AlgebraicSimplex t = s;
            std::swap(t.vertices[i], t.vertices[i + 1]);
            if (c.coefficient(t) != -q) return false;
        }
    }
    return true;
}

}  // namespace

Chain alternate(const Chain& c) { return alternate_impl(c); }
Cochain alternate(const Cochain& phi) { return alternate_impl(phi); }
bool is_alternating(const Chain& c) { return is_alternating_impl(c); }
bool is_alternating(const Cochain& phi) { return is_alternating_impl(phi); }

}  // namespace mcx
