#include "mcx/chain_complex.hpp"

#include "mcx/error.hpp"

#include <algorithm>

namespace mcx {

ChainComplex::ChainComplex(std::string label, std::vector<std::vector<AlgebraicSimplex>> bases,
                           std::vector<SparseIntMatrix> boundaries, bool truncated)
    : label_(std::move(label)), bases_(std::move(bases)), boundaries_(std::move(boundaries)), truncated_(truncated) {
    if (boundaries_.size() != bases_.size()) throw InvariantError("one boundary matrix per degree expected");
    index_.resize(bases_.size());
    for (std::size_t n = 0; n < bases_.size(); ++n) {
        for (std::size_t i = 0; i < bases_[n].size(); ++i) {
            if (bases_[n][i].degree() != static_cast<int>(n))
                throw InvariantError("basis element " + to_string(bases_[n][i]) + " has the wrong degree");
            if (!index_[n].emplace(bases_[n][i], i).second)
                throw InvariantError("duplicate basis element " + to_string(bases_[n][i]));
        }
        const auto& d = boundaries_[n];
        if (d.cols != bases_[n].size() || d.rows != (n == 0 ? 0 : bases_[n - 1].size()))
            throw InvariantError("boundary matrix of degree " + std::to_string(n) + " has the wrong shape");
    }
}

const std::vector<AlgebraicSimplex>& ChainComplex::basis(int n) const {
    static const std::vector<AlgebraicSimplex> none;
    if (n < 0 || n > top_degree()) return none;
    return bases_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> ChainComplex::index_of(int n, const AlgebraicSimplex& s) const {
    if (n < 0 || n > top_degree()) return std::nullopt;
    auto it = index_[static_cast<std::size_t>(n)].find(s);
    if (it == index_[static_cast<std::size_t>(n)].end()) return std::nullopt;
    return it->second;
}

const SparseIntMatrix& ChainComplex::boundary_matrix(int n) const {
    if (n < 0 || n > top_degree()) throw DomainError("no boundary matrix in degree " + std::to_string(n));
    return boundaries_[static_cast<std::size_t>(n)];
}

std::vector<Rational> ChainComplex::coordinates(const Chain& c) const {
    std::vector<Rational> x(rank(c.degree()));
    for (const auto& [s, q] : c.terms()) {
        auto i = index_of(c.degree(), s);
        if (!i) throw ReferenceError("algebraic simplex " + to_string(s) + " is not a basis element of " + label_);
        x[*i] = q;
    }
    return x;
}

Chain ChainComplex::chain_from(int n, const std::vector<Rational>& coords, Ring ring) const {
    Chain c(n, ring);
    const auto& b = basis(n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) c.add(b[i], coords[i]);
    return c;
}

Cochain ChainComplex::cochain_from(int n, const std::vector<Rational>& coords) const {
    Cochain phi(n, Ring::rationals);
    const auto& b = basis(n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) phi.add(b[i], coords[i]);
    return phi;
}

std::vector<Rational> ChainComplex::cochain_coordinates(const Cochain& phi) const {
    std::vector<Rational> x(rank(phi.degree()));
    for (const auto& [s, q] : phi.terms()) {
        auto i = index_of(phi.degree(), s);
        if (!i) throw ReferenceError("algebraic simplex " + to_string(s) + " is not a basis element of " + label_);
        x[*i] = q;
    }
    return x;
}

bool ChainComplex::contains(const Chain& c) const {
    return std::all_of(c.terms().begin(), c.terms().end(),
                       [&](const auto& t) { return index_of(c.degree(), t.first).has_value(); });
}

bool ChainComplex::satisfies_dd_zero() const {
    for (int n = 2; n <= top_degree(); ++n)
        if (!is_zero(multiply(boundary_matrix(n - 1), boundary_matrix(n)))) return false;
    return true;
}

AlgebraicSimplex canonical_simplex(const Multicomplex& mc, SimplexIndex s) {
    return {mc.id(s), mc.vertex_names(s)};
}

namespace {

// Face i of a generator: the tuple without entry i, on sigma itself when the
// remaining entries still cover its vertex set and on the opposite facet otherwise.
AlgebraicSimplex face_of(const Multicomplex& mc, const AlgebraicSimplex& s, std::size_t i) {
    AlgebraicSimplex out{s.simplex, s.vertices};
    out.vertices.erase(out.vertices.begin() + static_cast<std::ptrdiff_t>(i));
    if (std::find(out.vertices.begin(), out.vertices.end(), s.vertices[i]) != out.vertices.end()) return out;
    SimplexIndex sigma = mc.index_of(s.simplex);
    out.simplex = mc.id(mc.facet_opposite(sigma, mc.vertex_index(s.vertices[i])));
    return out;
}

// All tuples of the given length over `vertices` using every entry at least once.
void covering_tuples(const AlgebraicSimplex& canonical, std::size_t length, std::vector<AlgebraicSimplex>& out) {
    const std::size_t k = canonical.vertices.size();
    if (length < k) return;
    std::vector<std::size_t> digits(length, 0);
    std::vector<std::size_t> used(k, 0);
    while (true) {
        std::fill(used.begin(), used.end(), 0);
        for (auto d : digits) ++used[d];
        if (std::find(used.begin(), used.end(), 0) == used.end()) {
            AlgebraicSimplex s{canonical.simplex, {}};
            for (auto d : digits) s.vertices.push_back(canonical.vertices[d]);
            out.push_back(std::move(s));
        }
        std::size_t i = length;
        while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
        if (i == 0) break;
    }
}

ChainComplex assemble(const Multicomplex& mc, std::string label, std::vector<std::vector<AlgebraicSimplex>> bases,
                      bool truncated, bool reduced) {
    std::vector<std::map<AlgebraicSimplex, std::size_t>> index(bases.size());
    for (std::size_t n = 0; n < bases.size(); ++n) {
        std::sort(bases[n].begin(), bases[n].end());
        for (std::size_t i = 0; i < bases[n].size(); ++i) index[n][bases[n][i]] = i;
    }
    std::vector<SparseIntMatrix> boundaries;
    boundaries.emplace_back(0, bases.empty() ? 0 : bases[0].size());
    for (std::size_t n = 1; n < bases.size(); ++n) {
        SparseIntMatrix d(bases[n - 1].size(), bases[n].size());
        for (std::size_t j = 0; j < bases[n].size(); ++j) {
            std::map<std::size_t, std::int64_t> col;
            for (std::size_t i = 0; i <= n; ++i) {
                AlgebraicSimplex f = face_of(mc, bases[n][j], i);
                std::int64_t sign = i % 2 == 0 ? 1 : -1;
                if (reduced) sign *= sort_sign(f.vertices);
                auto it = index[n - 1].find(f);
                if (it == index[n - 1].end()) continue;  // face lies in the subcomplex quotiented out
                col[it->second] += sign;
            }
            for (const auto& [r, v] : col)
                if (v != 0) d.columns[j].emplace_back(r, v);
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(std::move(label), std::move(bases), std::move(boundaries), truncated);
}

int resolve_degree(const Multicomplex& mc, int max_degree, FullBasis kind = FullBasis::distinct) {
    if (max_degree >= 0) return max_degree;
    int d = std::max(mc.dimension(), 0);
    return kind == FullBasis::covering ? d + 1 : d;
}

std::vector<std::vector<AlgebraicSimplex>> full_bases(const Multicomplex& mc, int top, const std::vector<bool>& skip,
                                                      FullBasis kind) {
    std::vector<std::vector<AlgebraicSimplex>> bases(static_cast<std::size_t>(top) + 1);
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        int d = mc.simplex(s).dimension();
        if (d > top || skip[s]) continue;
        AlgebraicSimplex a = canonical_simplex(mc, s);
        if (kind == FullBasis::covering) {
            for (int n = d; n <= top; ++n) covering_tuples(a, static_cast<std::size_t>(n) + 1, bases[static_cast<std::size_t>(n)]);
            continue;
        }
        do {
            bases[static_cast<std::size_t>(d)].push_back(a);
        } while (std::next_permutation(a.vertices.begin(), a.vertices.end()));
    }
    return bases;
}

std::vector<std::vector<AlgebraicSimplex>> reduced_bases(const Multicomplex& mc, int top,
                                                         const std::vector<bool>& skip) {
    std::vector<std::vector<AlgebraicSimplex>> bases(static_cast<std::size_t>(top) + 1);
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        int d = mc.simplex(s).dimension();
        if (d <= top && !skip[s]) bases[static_cast<std::size_t>(d)].push_back(canonical_simplex(mc, s));
    }
    return bases;
}

}  // namespace

ChainComplex build_full_chain_complex(const Multicomplex& mc, int max_degree, FullBasis kind) {
    int top = resolve_degree(mc, max_degree, kind);
    bool truncated = kind == FullBasis::covering ? mc.size() > 0 : mc.dimension() > top;
    return assemble(mc, kind == FullBasis::covering ? "full" : "full-distinct",
                    full_bases(mc, top, std::vector<bool>(mc.size(), false), kind), truncated, false);
}

ChainComplex build_reduced_chain_complex(const Multicomplex& mc, int max_degree) {
    int top = resolve_degree(mc, max_degree);
    return assemble(mc, "reduced", reduced_bases(mc, top, std::vector<bool>(mc.size(), false)),
                    mc.dimension() > top, true);
}

ChainComplex build_relative_complex(const Multicomplex& k, const std::set<std::string>& l, int max_degree,
                                    bool reduced, FullBasis kind) {
    std::vector<bool> skip(k.size(), false);
    for (const auto& id : l) skip[k.index_of(id)] = true;
    for (SimplexIndex s = 0; s < k.size(); ++s) {
        if (!skip[s]) continue;
        for (auto f : k.simplex(s).facets)
            if (f != kNoSimplex && !skip[f])
                throw DomainError("relative complex: '" + k.id(s) + "' is in L but its facet '" + k.id(f) +
                                  "' is not; L is not a submulticomplex");
    }
    const bool covering = !reduced && kind == FullBasis::covering;
    int top = resolve_degree(k, max_degree, covering ? FullBasis::covering : FullBasis::distinct);
    bool truncated = false;
    for (SimplexIndex s = 0; s < k.size(); ++s)
        if (!skip[s] && (covering || k.simplex(s).dimension() > top)) truncated = true;
    auto bases = reduced ? reduced_bases(k, top, skip) : full_bases(k, top, skip, kind);
    return assemble(k, reduced ? "relative-reduced" : "relative-full", std::move(bases), truncated, reduced);
}

Chain project(const Chain& c) {
    Chain out(c.degree(), c.ring());
    for (const auto& [s, q] : c.terms()) {
        AlgebraicSimplex t = s;
        int sign = sort_sign(t.vertices);
        if (sign != 0) out.add(t, sign * q);
    }
    return out;
}

Chain section(const Chain& c) { return project(c); }

Chain boundary(const ChainComplex& cc, const Chain& c) {
    if (c.degree() <= 0) return Chain(0, c.ring());
    auto y = cc.boundary_matrix(c.degree()).apply(cc.coordinates(c));
    return cc.chain_from(c.degree() - 1, y, c.ring());
}

Cochain coboundary(const ChainComplex& cc, const Cochain& phi) {
    if (phi.degree() + 1 > cc.top_degree())
        throw DomainError("coboundary needs the complex in degree " + std::to_string(phi.degree() + 1));
    auto x = cc.boundary_matrix(phi.degree() + 1).apply_transpose(cc.cochain_coordinates(phi));
    return cc.cochain_from(phi.degree() + 1, x);
}

Chain boundary(const Multicomplex& mc, const Chain& c) {
    if (c.degree() <= 0) return Chain(0, c.ring());
    Chain out(c.degree() - 1, c.ring());
    for (const auto& [s, q] : c.terms()) {
        for (std::size_t i = 0; i < s.vertices.size(); ++i)
            out.add(face_of(mc, s, i), i % 2 == 0 ? q : -q);
    }
    return out;
}

}  // namespace mcx
