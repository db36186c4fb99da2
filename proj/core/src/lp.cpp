#include "mcx/lp.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <optional>

namespace mcx {

namespace {

class Tableau {
public:
    Tableau(RatMatrix t, std::vector<Rational> rhs, std::vector<std::size_t> basis)
        : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

    // Runs the simplex method for `cost` over columns allowed by `eligible`.
    // Returns false when unbounded.
    bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& eligible, std::size_t& pivots) {
        const std::size_t m = t_.rows(), n = t_.cols();
        std::vector<Rational> reduced = cost;
        for (std::size_t i = 0; i < m; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (t_(i, j) != 0) reduced[j] -= cb * t_(i, j);
        }
        while (true) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < n; ++j)
                if (eligible[j] && reduced[j] < 0) {
                    entering = j;
                    break;
                }
            if (!entering) return true;
            const std::size_t q = *entering;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t_(i, q) <= 0) continue;
                Rational ratio = rhs_[i] / t_(i, q);
                if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, q, reduced);
            ++pivots;
        }
    }

    void pivot(std::size_t r, std::size_t q, std::vector<Rational>& reduced) {
        const std::size_t m = t_.rows(), n = t_.cols();
        const Rational inv = 1 / t_(r, q);
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < n; ++j)
            if (t_(r, j) != 0) {
                t_(r, j) *= inv;
                nz.push_back(j);
            }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t_(i, q) == 0) continue;
            const Rational f = t_(i, q);
            for (auto j : nz) t_(i, j) -= f * t_(r, j);
            rhs_[i] -= f * rhs_[r];
        }
        if (reduced[q] != 0) {
            const Rational f = reduced[q];
            for (auto j : nz) reduced[j] -= f * t_(r, j);
        }
        basis_[r] = q;
    }

    const RatMatrix& table() const { return t_; }
    const std::vector<Rational>& rhs() const { return rhs_; }
    std::vector<std::size_t>& basis() { return basis_; }

private:
    RatMatrix t_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    const std::size_t m = lp.a.rows(), n = lp.a.cols();
    if (lp.b.size() != m || lp.c.size() != n) throw InvariantError("linear program has inconsistent shapes");

    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        if (lp.b[i] < 0) row_sign[i] = -1;

    // Crash basis from unit columns.
    std::vector<std::optional<std::size_t>> unit_for_row(m);
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::size_t> row;
        bool unit = true;
        for (std::size_t i = 0; i < m && unit; ++i) {
            Rational v = row_sign[i] * lp.a(i, j);
            if (v == 0) continue;
            if (v == 1 && !row)
                row = i;
            else
                unit = false;
        }
        if (unit && row && !unit_for_row[*row]) unit_for_row[*row] = j;
    }
    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (!unit_for_row[i]) artificial_rows.push_back(i);

    const std::size_t total = n + artificial_rows.size();
    RatMatrix t(m, total);
    std::vector<Rational> rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (lp.a(i, j) != 0) t(i, j) = row_sign[i] * lp.a(i, j);
        rhs[i] = row_sign[i] * lp.b[i];
        if (unit_for_row[i]) basis[i] = *unit_for_row[i];
    }
    for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
        t(artificial_rows[k], n + k) = 1;
        basis[artificial_rows[k]] = n + k;
    }

    Tableau tab(std::move(t), std::move(rhs), std::move(basis));
    LpSolution sol;
    std::vector<bool> eligible(total, true);
    if (!artificial_rows.empty()) {
        std::vector<Rational> phase1(total);
        for (std::size_t k = 0; k < artificial_rows.size(); ++k) phase1[n + k] = 1;
        tab.optimize(phase1, eligible, sol.pivots);
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (tab.basis()[i] >= n) infeasibility += tab.rhs()[i];
        if (infeasibility != 0) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive zero-level artificials out of the basis where possible.
        std::vector<Rational> unused(total);
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis()[i] < n) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (tab.table()(i, j) != 0) {
                    tab.pivot(i, j, unused);
                    ++sol.pivots;
                    break;
                }
        }
        for (std::size_t j = n; j < total; ++j) eligible[j] = false;
    }
    std::vector<Rational> cost(total);
    for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
    if (!tab.optimize(cost, eligible, sol.pivots)) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis()[i] < n) sol.x[tab.basis()[i]] = tab.rhs()[i];
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += lp.c[j] * sol.x[j];
    sol.basis = tab.basis();

    // Dual: solve B^T y = c_B for the final basis of the sign-adjusted system.
    RatMatrix bt(m, m);
    std::vector<Rational> cb(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t col = sol.basis[i];
        for (std::size_t r = 0; r < m; ++r) {
            Rational entry = col < n ? Rational(row_sign[r] * lp.a(r, col))
                                     : Rational(r == artificial_rows[col - n] ? 1 : 0);
            bt(i, r) = entry;
        }
        cb[i] = col < n ? lp.c[col] : Rational(0);
    }
    auto y = RationalSolver(bt).solve(cb);
    if (!y) throw InvariantError("final simplex basis is singular");
    sol.y.resize(m);
    for (std::size_t r = 0; r < m; ++r) sol.y[r] = row_sign[r] * (*y)[r];
    return sol;
}

}  // namespace mcx
