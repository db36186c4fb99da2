#include "mcx/linalg.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <map>

namespace mcx {

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

std::vector<Rational> SparseIntMatrix::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        if (x[c] == 0) continue;
        for (const auto& [r, v] : columns[c]) y[r] += x[c] * v;
    }
    return y;
}

std::vector<Rational> SparseIntMatrix::apply_transpose(const std::vector<Rational>& y) const {
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[c])
            if (y[r] != 0) x[c] += y[r] * v;
    return x;
}

RatMatrix SparseIntMatrix::rational() const {
    RatMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[c]) m(r, c) = v;
    return m;
}

IntMatrix SparseIntMatrix::integral() const {
    IntMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[c]) m(r, c) = v;
    return m;
}

SparseIntMatrix SparseIntMatrix::select_rows(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> position(rows, rows);
    for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = i;
    SparseIntMatrix out(keep.size(), cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [r, v] : columns[c])
            if (position[r] != rows) out.columns[c].emplace_back(position[r], v);
    return out;
}

SparseIntMatrix SparseIntMatrix::select_columns(const std::vector<std::size_t>& keep) const {
    SparseIntMatrix out(rows, keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) out.columns[i] = columns[keep[i]];
    return out;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw InvariantError("matrix shapes do not compose");
    SparseIntMatrix c(a.rows, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::map<std::size_t, std::int64_t> acc;
        for (const auto& [k, v] : b.columns[j])
            for (const auto& [i, w] : a.columns[k]) acc[i] += v * w;
        for (const auto& [i, v] : acc)
            if (v != 0) c.columns[j].emplace_back(i, v);
    }
    return c;
}

bool is_zero(const SparseIntMatrix& m) {
    return std::all_of(m.columns.begin(), m.columns.end(), [](const auto& c) { return c.empty(); });
}

RationalSolver::RationalSolver(const RatMatrix& a) : rref_(a), ops_(RatMatrix::identity(a.rows())) {
    const std::size_t m = rref_.rows(), n = rref_.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && rref_(pivot, col) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < n; ++c) std::swap(rref_(pivot, c), rref_(row, c));
            for (std::size_t c = 0; c < m; ++c) std::swap(ops_(pivot, c), ops_(row, c));
        }
        const Rational inv = 1 / rref_(row, col);
        for (std::size_t c = 0; c < n; ++c)
            if (rref_(row, c) != 0) rref_(row, c) *= inv;
        for (std::size_t c = 0; c < m; ++c)
            if (ops_(row, c) != 0) ops_(row, c) *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || rref_(r, col) == 0) continue;
            const Rational factor = rref_(r, col);
            for (std::size_t c = 0; c < n; ++c)
                if (rref_(row, c) != 0) rref_(r, c) -= factor * rref_(row, c);
            for (std::size_t c = 0; c < m; ++c)
                if (ops_(row, c) != 0) ops_(r, c) -= factor * ops_(row, c);
        }
        pivots_.push_back(col);
        ++row;
    }
}

std::vector<Rational> RationalSolver::transform(const std::vector<Rational>& b) const {
    if (b.size() != rref_.rows()) throw InvariantError("right-hand side has the wrong length");
    return ops_.apply(b);
}

bool RationalSolver::in_image(const std::vector<Rational>& b) const {
    auto y = transform(b);
    for (std::size_t r = rank(); r < y.size(); ++r)
        if (y[r] != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> RationalSolver::solve(const std::vector<Rational>& b) const {
    auto y = transform(b);
    for (std::size_t r = rank(); r < y.size(); ++r)
        if (y[r] != 0) return std::nullopt;
    std::vector<Rational> x(cols());
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
    return x;
}

std::vector<std::vector<Rational>> RationalSolver::kernel() const {
    std::vector<bool> is_pivot(cols(), false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(cols());
        x[free] = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = -rref_(i, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

struct SmithWorker {
    IntMatrix& a;
    SmithForm& out;
    bool left, right;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        if (left) {
            for (std::size_t c = 0; c < out.u.cols(); ++c) std::swap(out.u(i, c), out.u(j, c));
            for (std::size_t r = 0; r < out.u_inv.rows(); ++r) std::swap(out.u_inv(r, i), out.u_inv(r, j));
        }
    }
    // row_i += k * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& k) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(j, c) != 0) a(i, c) += k * a(j, c);
        if (left) {
            for (std::size_t c = 0; c < out.u.cols(); ++c)
                if (out.u(j, c) != 0) out.u(i, c) += k * out.u(j, c);
            for (std::size_t r = 0; r < out.u_inv.rows(); ++r)
                if (out.u_inv(r, i) != 0) out.u_inv(r, j) -= k * out.u_inv(r, i);
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        if (left) {
            for (std::size_t c = 0; c < out.u.cols(); ++c) out.u(i, c) = -out.u(i, c);
            for (std::size_t r = 0; r < out.u_inv.rows(); ++r) out.u_inv(r, i) = -out.u_inv(r, i);
        }
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        if (right) {
            for (std::size_t r = 0; r < out.v.rows(); ++r) std::swap(out.v(r, i), out.v(r, j));
            for (std::size_t c = 0; c < out.v_inv.cols(); ++c) std::swap(out.v_inv(i, c), out.v_inv(j, c));
        }
    }
    // col_i += k * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& k) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, j) != 0) a(r, i) += k * a(r, j);
        if (right) {
            for (std::size_t r = 0; r < out.v.rows(); ++r)
                if (out.v(r, j) != 0) out.v(r, i) += k * out.v(r, j);
            for (std::size_t c = 0; c < out.v_inv.cols(); ++c)
                if (out.v_inv(i, c) != 0) out.v_inv(j, c) -= k * out.v_inv(i, c);
        }
    }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, unsigned tracking) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm out;
    const bool left = tracking & track_left, right = tracking & track_right;
    if (left) {
        out.u = IntMatrix::identity(m);
        out.u_inv = IntMatrix::identity(m);
    }
    if (right) {
        out.v = IntMatrix::identity(n);
        out.v_inv = IntMatrix::identity(n);
    }
    SmithWorker w{a, out, left, right};

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t c = t; c < n; ++c)
                for (std::size_t r = t; r < m; ++r) {
                    if (a(r, c) == 0) continue;
                    if (!best || abs(a(r, c)) < abs(a(best->first, best->second))) best = {{r, c}};
                    if (abs(a(r, c)) == 1) return best;
                }
            return best;
        };
        auto pivot = find_pivot();
        if (!pivot) break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);
        while (true) {
            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0) continue;
                Integer q = a(r, t) / a(t, t);
                w.add_row(r, t, -q);
                if (a(r, t) != 0) {
                    w.swap_rows(t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0) continue;
                Integer q = a(t, c) / a(t, t);
                w.add_col(c, t, -q);
                if (a(t, c) != 0) {
                    w.swap_cols(t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and repeat.
            bool divides = true;
            for (std::size_t r = t + 1; r < m && divides; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        w.add_row(t, r, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) w.negate_row(t);
        out.diagonal.push_back(a(t, t));
    }
    return out;
}

IntegerSolver::IntegerSolver(const IntMatrix& a, bool need_preimage)
    : smith_(smith_normal_form(a, need_preimage ? track_all : track_left)),
      rows_(a.rows()),
      cols_(a.cols()),
      preimage_(need_preimage) {}

bool IntegerSolver::in_image(const std::vector<Integer>& b) const {
    auto y = smith_.u.apply(b);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < rank()) {
            if (y[i] % smith_.diagonal[i] != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<Integer>> IntegerSolver::solve(const std::vector<Integer>& b) const {
    if (!preimage_) throw InvariantError("integer solver was built without preimage tracking");
    if (!in_image(b)) return std::nullopt;
    auto y = smith_.u.apply(b);
    std::vector<Integer> z(cols_);
    for (std::size_t i = 0; i < rank(); ++i) z[i] = y[i] / smith_.diagonal[i];
    return smith_.v.apply(z);
}

}  // namespace mcx
