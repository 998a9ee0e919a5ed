#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "orthocomp/errors.hpp"

namespace orthocomp {

using Complex = std::complex<double>;

inline double conj_value(double x) { return x; }
inline Complex conj_value(const Complex &z) { return std::conj(z); }

/// Row-major dense matrix. Only what the gate and factorization code needs.
template <typename T> class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    /// Builds from nested rows; all rows must share one length.
    static DenseMatrix from_rows(const std::vector<std::vector<T>> &rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        DenseMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw DimensionMismatchError("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * c);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const T> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const {
        if (cols_ != rhs.rows_)
            throw DimensionMismatchError("matrix product shape mismatch");
        DenseMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T a = (*this)(i, k);
                if (a == T{})
                    continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    std::vector<T> operator*(std::span<const T> v) const {
        if (v.size() != cols_)
            throw DimensionMismatchError("matrix-vector shape mismatch");
        std::vector<T> out(rows_, T{});
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc{};
            for (std::size_t j = 0; j < cols_; ++j)
                acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    /// Conjugate transpose (plain transpose for real T).
    DenseMatrix adjoint() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = conj_value((*this)(i, j));
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Largest |a_ij - b_ij|. Shapes must agree.
template <typename T>
double max_abs_difference(const DenseMatrix<T> &a, const DenseMatrix<T> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("shape mismatch in comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

/// max-entry |M^† M - I|; zero for an exactly orthogonal/unitary M.
template <typename T> double unitarity_defect(const DenseMatrix<T> &m) {
    if (!m.square())
        throw DimensionMismatchError("unitarity check needs a square matrix");
    return max_abs_difference(m.adjoint() * m,
                              DenseMatrix<T>::identity(m.rows()));
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

constexpr unsigned log2_exact(std::size_t n) noexcept {
    unsigned k = 0;
    while ((std::size_t{1} << k) < n)
        ++k;
    return k;
}

} // namespace orthocomp
