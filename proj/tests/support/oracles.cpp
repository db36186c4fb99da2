#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace mcx::oracle {

std::size_t rank_q(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_q(const SparseIntMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows, std::vector<Rational>(m.cols, Rational(0)));
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j]) rows[r][j] = v;
    return rank_q(std::move(rows));
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> rows(m.rows, std::vector<std::int64_t>(m.cols, 0));
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j]) rows[r][j] = ((v % p) + p) % p;
    auto inverse = [p](std::int64_t a) {
        std::int64_t result = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t q = rank;
        while (q < m.rows && rows[q][c] == 0) ++q;
        if (q == m.rows) continue;
        std::swap(rows[q], rows[rank]);
        std::int64_t inv = inverse(rows[rank][c]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (rows[r][c] == 0) continue;
            std::int64_t f = rows[r][c] * inv % p;
            for (std::size_t k = c; k < m.cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t betti_q(const ChainComplex& cc, int n) {
    std::size_t dn = rank_q(cc.boundary_matrix(n));
    std::size_t dn1 = n < cc.top_degree() ? rank_q(cc.boundary_matrix(n + 1)) : 0;
    return cc.rank(n) - dn - dn1;
}

std::size_t betti_mod_p(const ChainComplex& cc, int n, std::int64_t p) {
    std::size_t dn = rank_mod_p(cc.boundary_matrix(n), p);
    std::size_t dn1 = n < cc.top_degree() ? rank_mod_p(cc.boundary_matrix(n + 1), p) : 0;
    return cc.rank(n) - dn - dn1;
}

Chain boundary_by_faces(const Multicomplex& mc, const Chain& c) {
    Chain out(std::max(c.degree() - 1, 0), c.ring());
    if (c.degree() == 0) return out;
    for (const auto& [s, q] : c.terms()) {
        SimplexIndex sigma = mc.index_of(s.simplex);
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            std::vector<std::string> rest = s.vertices;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<VertexIndex> subset;
            for (const auto& v : rest) subset.push_back(mc.vertex_index(v));
            std::sort(subset.begin(), subset.end());
            subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
            SimplexIndex face = mc.face(sigma, subset);
            out.add({mc.id(face), rest}, (i % 2 == 0 ? 1 : -1) * q);
        }
    }
    return out;
}

std::size_t invariant_cohomology_dim(const GroupAction& a, int n) {
    ChainComplex cc = build_full_chain_complex(a.complex(), n + 1, FullBasis::covering);
    auto orbit_index = [&](int k) {
        std::map<AlgebraicSimplex, std::size_t> index;
        std::size_t next = 0;
        for (const auto& s : cc.basis(k)) {
            if (index.count(s)) continue;
            for (std::size_t g = 0; g < a.group().order(); ++g) index[a.act(g, s)] = next;
            ++next;
        }
        return std::pair{index, next};
    };
    // Matrix of delta_k on orbit indicators: rows = orbits in degree k+1, cols = orbits in degree k.
    auto delta_rank = [&](int k) -> std::size_t {
        if (k < 0 || k + 1 > cc.top_degree()) return 0;
        auto [lo, lo_count] = orbit_index(k);
        auto [hi, hi_count] = orbit_index(k + 1);
        std::vector<std::vector<Rational>> rows(hi_count, std::vector<Rational>(lo_count, Rational(0)));
        std::set<std::size_t> done;
        const auto& d = cc.boundary_matrix(k + 1);
        for (std::size_t j = 0; j < cc.rank(k + 1); ++j) {
            std::size_t row = hi.at(cc.basis(k + 1)[j]);
            if (!done.insert(row).second) continue;
            for (const auto& [r, v] : d.columns[j]) rows[row][lo.at(cc.basis(k)[r])] += v;
        }
        return rank_q(std::move(rows));
    };
    auto [orbits_n, count_n] = orbit_index(n);
    (void)orbits_n;
    return count_n - delta_rank(n) - delta_rank(n - 1);
}

SparseFunction convolve_direct(const Measure& mu, const SparseFunction& f, const ActionOnSet& a,
                               const std::vector<Point>& points) {
    SparseFunction out;
    for (const auto& x : points) {
        Rational sum = 0;
        for (const auto& [g, w] : mu) {
            Point y = a.act(a.group.inverse(g), x);
            auto it = f.find(y);
            if (it != f.end()) sum += w * it->second;
        }
        if (sum != 0) out[x] = sum;
    }
    return out;
}

Rational derivative_z(const Measure& mu, const GroupModel::Element& phi) {
    std::set<GroupModel::Element> scan;
    for (const auto& [g, w] : mu) {
        (void)w;
        scan.insert(g);
        GroupModel::Element h = g;
        for (std::size_t i = 0; i < h.size(); ++i) h[i] -= phi[i];
        scan.insert(h);
    }
    Rational total = 0;
    for (const auto& g : scan) {
        GroupModel::Element h = g;
        for (std::size_t i = 0; i < h.size(); ++i) h[i] += phi[i];
        auto at = [&](const GroupModel::Element& e) {
            auto it = mu.find(e);
            return it == mu.end() ? Rational(0) : it->second;
        };
        Rational diff = at(h) - at(g);
        total += diff < 0 ? Rational(-diff) : diff;
    }
    return total;
}

GroupAction copies_action(const Multicomplex& k, std::size_t m) {
    auto copy_id = [&](SimplexIndex s, std::size_t c) {
        return k.simplex(s).dimension() == 0 ? k.id(s) : k.id(s) + "#" + std::to_string(c);
    };
    RawMulticomplex raw;
    raw.vertices = k.vertices();
    for (SimplexIndex s = 0; s < k.size(); ++s) {
        const auto& sim = k.simplex(s);
        std::size_t copies = sim.dimension() == 0 ? 1 : m;
        for (std::size_t c = 0; c < copies; ++c) {
            RawSimplex r{copy_id(s, c), k.vertex_names(s), {}};
            if (sim.dimension() > 0)
                for (std::size_t i = 0; i < sim.vertices.size(); ++i) {
                    std::vector<std::string> rest = r.vertices;
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                    r.facets[subset_key(rest)] = copy_id(sim.facets[i], c);
                }
            raw.simplices.push_back(std::move(r));
        }
    }
    auto mc = std::make_shared<const Multicomplex>(Multicomplex::from_raw(raw));
    std::vector<SimplicialMap> maps;
    for (std::size_t g = 0; g < m; ++g) {
        SimplicialMap f;
        for (const auto& v : k.vertices()) f.vertex_map[v] = v;
        for (SimplexIndex s = 0; s < k.size(); ++s) {
            if (k.simplex(s).dimension() == 0) {
                f.simplex_map[k.id(s)] = k.id(s);
                continue;
            }
            for (std::size_t c = 0; c < m; ++c) f.simplex_map[copy_id(s, c)] = copy_id(s, (c + g) % m);
        }
        maps.push_back(std::move(f));
    }
    return GroupAction(mc, FiniteGroup::cyclic(m), std::move(maps));
}

}  // namespace mcx::oracle
