#pragma once

#include "g2c/scalar.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace g2c {

// Dense exact-rational matrix. Small sizes only (at most ~150 rows here),
// so plain Gaussian elimination over Q is fine.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const = default;

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::size_t rank() const;
    Scalar det() const;        // square only
    Mat inverse() const;       // square, nonsingular
    // Basis of the nullspace, one column vector per basis element.
    std::vector<std::vector<Scalar>> kernel_basis() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

using Vec7 = std::array<Scalar, 7>;

Mat diag7(const std::array<int, 7>& d);

inline Scalar dot(const Vec7& u, const Vec7& v) {
    Scalar s = 0;
    for (int i = 0; i < 7; ++i) s += u[i] * v[i];
    return s;
}

// Leading-principal-minor test; exact.
bool positive_definite(const Mat& m);

}  // namespace g2c
