#pragma once

#include "mcx/linalg.hpp"
#include "mcx/rational.hpp"

#include <cstddef>
#include <vector>

namespace mcx {

/// min c^T x subject to A x = b, x >= 0.
struct LinearProgram {
    RatMatrix a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Primal solution x and dual solution y of max b^T y subject to A^T y <= c.
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> y;
    std::vector<std::size_t> basis;
    std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule. Columns
/// that are already unit vectors (after making b nonnegative) seed the basis;
/// artificial columns are added only for the remaining rows.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace mcx
