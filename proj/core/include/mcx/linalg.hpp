#pragma once

#include "mcx/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mcx {

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0 && x[c] != 0) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<Integer>;

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    DenseMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

/// Column-sparse integer matrix with machine-size entries (boundary matrices).
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    std::size_t nonzeros() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    std::vector<Rational> apply_transpose(const std::vector<Rational>& y) const;
    RatMatrix rational() const;
    IntMatrix integral() const;
    SparseIntMatrix select_rows(const std::vector<std::size_t>& keep) const;
    SparseIntMatrix select_columns(const std::vector<std::size_t>& keep) const;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
bool is_zero(const SparseIntMatrix& m);

/// Gauss-Jordan elimination over Q, remembering the row operations so that
/// A x = b can be solved for many right-hand sides.
class RationalSolver {
public:
    RationalSolver() = default;
    explicit RationalSolver(const RatMatrix& a);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rref_.rows(); }
    std::size_t cols() const { return rref_.cols(); }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    bool in_image(const std::vector<Rational>& b) const;
    /// Some x with A x = b, or nothing.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    /// Basis of {x : A x = 0}, one vector per free column.
    std::vector<std::vector<Rational>> kernel() const;

private:
    std::vector<Rational> transform(const std::vector<Rational>& b) const;

    RatMatrix rref_;
    RatMatrix ops_;  // ops_ * A == rref_
    std::vector<std::size_t> pivots_;
};

/// U A V = D with D diagonal, d_1 | d_2 | ... and d_i > 0; U, V unimodular.
struct SmithForm {
    IntMatrix u, u_inv, v, v_inv;
    std::vector<Integer> diagonal;  // nonzero invariant factors, length = rank

    std::size_t rank() const { return diagonal.size(); }
};

enum SmithTracking : unsigned { track_none = 0, track_left = 1, track_right = 2, track_all = 3 };

SmithForm smith_normal_form(IntMatrix a, unsigned tracking = track_all);

/// Integer solver for A x = b built on the Smith form.
class IntegerSolver {
public:
    IntegerSolver() = default;
    IntegerSolver(const IntMatrix& a, bool need_preimage);

    std::size_t rank() const { return smith_.rank(); }
    const SmithForm& smith() const { return smith_; }
    bool in_image(const std::vector<Integer>& b) const;
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;

private:
    SmithForm smith_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    bool preimage_ = false;
};

}  // namespace mcx
