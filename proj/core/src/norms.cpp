#include "mcx/norms.hpp"

#include "mcx/error.hpp"
#include "mcx/lp.hpp"

#include <algorithm>
#include <functional>

namespace mcx {

Rational l1_norm(const Chain& c) {
    Rational sum = 0;
    for (const auto& [s, q] : c.terms()) sum += abs(q);
    return sum;
}

Rational linf_norm(const Cochain& phi) {
    Rational best = 0;
    for (const auto& [s, q] : phi.terms()) best = std::max(best, abs(q));
    return best;
}

Rational linf_norm(const Cochain& phi, const std::vector<AlgebraicSimplex>& basis) {
    Rational best = 0;
    for (const auto& s : basis) best = std::max(best, abs(phi.coefficient(s)));
    return best;
}

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

const SparseIntMatrix* next_boundary(const ChainComplex& cc, int n, SparseIntMatrix& none) {
    if (n + 1 <= cc.top_degree()) return &cc.boundary_matrix(n + 1);
    if (cc.truncated())
        throw DomainError("complex is truncated at degree " + std::to_string(cc.top_degree()) +
                          "; degree " + std::to_string(n + 1) + " is needed");
    none = SparseIntMatrix(cc.rank(n), 0);
    return &none;
}

void require_cycle(const ChainComplex& cc, const Chain& z) {
    if (z.degree() > 0 && !all_zero(cc.boundary_matrix(z.degree()).apply(cc.coordinates(z))))
        throw DomainError("chain is not a cycle");
}

}  // namespace

SeminormResult seminorm_l1(const ChainComplex& cc, const Chain& z) {
    require_cycle(cc, z);
    const int n = z.degree();
    SparseIntMatrix none;
    const SparseIntMatrix& d = *next_boundary(cc, n, none);
    const std::size_t m = cc.rank(n), k = d.cols;
    auto zc = cc.coordinates(z);

    // Columns: b+ (k), b- (k), p (m), q (m);  d b+ - d b- + p - q = z.
    LinearProgram lp{RatMatrix(m, 2 * k + 2 * m), zc, std::vector<Rational>(2 * k + 2 * m)};
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [r, v] : d.columns[j]) {
            lp.a(r, j) = v;
            lp.a(r, k + j) = -v;
        }
    for (std::size_t i = 0; i < m; ++i) {
        lp.a(i, 2 * k + i) = 1;
        lp.a(i, 2 * k + m + i) = -1;
        lp.c[2 * k + i] = 1;
        lp.c[2 * k + m + i] = 1;
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) throw InvariantError("seminorm linear program did not reach an optimum");

    std::vector<Rational> b(k), rep(m);
    for (std::size_t j = 0; j < k; ++j) b[j] = sol.x[j] - sol.x[k + j];
    for (std::size_t i = 0; i < m; ++i) rep[i] = sol.x[2 * k + i] - sol.x[2 * k + m + i];

    SeminormResult result{sol.value, cc.chain_from(n, rep), Chain(n + 1), cc.cochain_from(n, sol.y), sol.pivots};
    if (k > 0) result.bounding_chain = cc.chain_from(n + 1, b);
    return result;
}

VolumeResult simplicial_volume(const Multicomplex& mc) {
    const int n = mc.dimension();
    FundamentalCycle fc = fundamental_cycle(mc, n);
    if (!fc.cycle) throw DomainError("no fundamental cycle: " + fc.diagnostic);
    ChainComplex cc = build_reduced_chain_complex(mc, n);
    Chain real = fc.cycle->with_ring(Ring::rationals);
    SeminormResult detail = seminorm_l1(cc, real);
    return {detail.value, *fc.cycle, detail};
}

DualAudit audit_seminorm(const ChainComplex& cc, const Chain& z, const SeminormResult& result) {
    DualAudit audit;
    const int n = z.degree();
    Chain diff = z;
    diff -= result.representative;
    if (result.bounding_chain.is_zero()) {
        audit.primal_feasible = diff.is_zero();
    } else {
        Chain db = boundary(cc, result.bounding_chain);
        audit.primal_feasible = db == diff;
    }
    audit.norm_matches = l1_norm(result.representative) == result.value;
    audit.certificate_bounded = linf_norm(result.certificate, cc.basis(n)) <= 1;
    if (n + 1 <= cc.top_degree())
        audit.certificate_cocycle = coboundary(cc, result.certificate).is_zero();
    else
        audit.certificate_cocycle = !cc.truncated();
    audit.pairing_matches =
        pairing(result.certificate, z) == result.value && pairing(result.certificate, result.representative) == result.value;
    return audit;
}

bool dual_check(const ChainComplex& cc, const Chain& z) { return audit_seminorm(cc, z, seminorm_l1(cc, z)).ok(); }

BruteForceResult integral_seminorm_bruteforce(const ChainComplex& cc, const Chain& z, int coeff_bound,
                                              int support_bound, std::size_t node_budget) {
    require_cycle(cc, z);
    const int n = z.degree();
    auto zc = cc.coordinates(z);
    std::vector<Integer> zi;
    for (const auto& q : zc) {
        if (!is_integral(q)) throw DomainError("integral seminorm needs an integral cycle");
        zi.push_back(numerator(q));
    }
    SparseIntMatrix none;
    const SparseIntMatrix& next = *next_boundary(cc, n, none);
    IntegerSolver image(next.integral(), false);

    BruteForceResult result;
    result.value = numerator(l1_norm(z));
    result.representative = z.with_ring(Ring::integers);

    const std::size_t m = cc.rank(n);
    // Rows of d_n touched by each column and, per row, the last column touching it.
    const SparseIntMatrix* dn = n > 0 ? &cc.boundary_matrix(n) : nullptr;
    const std::size_t rows = dn ? dn->rows : 0;
    std::vector<std::size_t> last_col(rows, 0);
    if (dn)
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [r, v] : dn->columns[j]) last_col[r] = std::max(last_col[r], j);
    std::int64_t col_weight = 0;
    if (dn)
        for (const auto& c : dn->columns) {
            std::int64_t w = 0;
            for (const auto& [r, v] : c) w += std::abs(v);
            col_weight = std::max(col_weight, w);
        }

    const Integer zero_norm = result.value;
    std::vector<std::int64_t> partial(rows, 0);
    std::vector<std::int64_t> w(m, 0);
    std::int64_t partial_l1 = 0;
    bool found = false;
    bool out_of_budget = false;

    auto in_class = [&]() {
        std::vector<Integer> diff(m);
        for (std::size_t i = 0; i < m; ++i) diff[i] = Integer(w[i]) - zi[i];
        return image.in_image(diff);
    };
    auto apply_column = [&](std::size_t j, std::int64_t coeff) {
        if (!dn) return;
        for (const auto& [r, v] : dn->columns[j]) {
            partial_l1 -= std::abs(partial[r]);
            partial[r] += coeff * v;
            partial_l1 += std::abs(partial[r]);
        }
    };

    // Depth-first search over columns in increasing order with exact remaining budget.
    std::function<void(std::size_t, std::int64_t, int)> search = [&](std::size_t start, std::int64_t remaining,
                                                                      int support_left) {
        if (found || out_of_budget) return;
        if (++result.nodes > node_budget) {
            out_of_budget = true;
            return;
        }
        if (remaining == 0) {
            if (partial_l1 == 0 && in_class()) found = true;
            return;
        }
        if (support_left == 0 || start >= m) return;
        if (partial_l1 > col_weight * remaining && dn) return;
        for (std::size_t r = 0; r < rows; ++r)
            if (partial[r] != 0 && last_col[r] < start) return;
        for (std::size_t j = start; j < m && !found && !out_of_budget; ++j) {
            for (std::int64_t mag = 1; mag <= std::min<std::int64_t>(remaining, coeff_bound); ++mag) {
                for (std::int64_t sign : {1, -1}) {
                    w[j] = sign * mag;
                    apply_column(j, w[j]);
                    search(j + 1, remaining - mag, support_left - 1);
                    apply_column(j, -w[j]);
                    if (found) return;
                    w[j] = 0;
                }
            }
        }
    };

    for (std::int64_t k = 0; Integer(k) < zero_norm && !found && !out_of_budget; ++k) {
        search(0, k, support_bound);
        if (found) {
            result.value = k;
            Chain rep(n, Ring::integers);
            for (std::size_t i = 0; i < m; ++i)
                if (w[i] != 0) rep.add(cc.basis(n)[i], Rational(w[i]));
            result.representative = rep;
        }
    }
    result.exhaustive = !out_of_budget;
    // Every cycle of norm below the value has coefficients and support bounded by value - 1.
    result.globally_optimal = result.exhaustive && Integer(coeff_bound) >= result.value - 1 &&
                              Integer(support_bound) >= result.value - 1;
    return result;
}

}  // namespace mcx
