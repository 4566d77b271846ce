#include "g2c/linalg.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

namespace g2c {

namespace {

// Fraction-free rank over 64-bit integers with overflow checks; returns -1
// when an entry is non-integral, too large, or an intermediate overflows, in
// which case the caller falls back to exact rational elimination.
int integer_rank_fast(const Mat& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<long long> a(R * C);
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
            const Scalar& s = m(i, j);
            if (den(s) != 1) return -1;
            const Int& n = num(s);
            if (n > (std::numeric_limits<long long>::max)() ||
                n <= (std::numeric_limits<long long>::min)())
                return -1;
            a[i * C + j] = n.convert_to<long long>();
        }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = R;
        for (std::size_t i = rank; i < R; ++i) {
            long long v = a[i * C + col];
            if (v != 0 && (piv == R || std::llabs(v) < std::llabs(a[piv * C + col]))) piv = i;
        }
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[rank * C + j]);
        const long long p = a[rank * C + col];
        for (std::size_t i = rank + 1; i < R; ++i) {
            const long long f = a[i * C + col];
            if (f == 0) continue;
            const long long g = std::gcd(p, f);
            const long long mp = p / g, mf = f / g;
            long long content = 0;
            for (std::size_t j = col; j < C; ++j) {
                long long t1, t2, r;
                if (__builtin_mul_overflow(mp, a[i * C + j], &t1) ||
                    __builtin_mul_overflow(mf, a[rank * C + j], &t2) ||
                    __builtin_sub_overflow(t1, t2, &r) ||
                    r == (std::numeric_limits<long long>::min)())
                    return -1;
                a[i * C + j] = r;
                content = std::gcd(content, r);
            }
            if (content > 1)
                for (std::size_t j = col; j < C; ++j) a[i * C + j] /= content;
        }
        ++rank;
    }
    return int(rank);
}

// Row echelon reduction in place; returns pivot column list.
std::vector<std::size_t> echelon(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t Mat::rank() const {
    const int fast = integer_rank_fast(*this);
    if (fast >= 0) return std::size_t(fast);
    Mat m = *this;
    return echelon(m).size();
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    Mat m = *this;
    Scalar d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && m(piv, col) == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        const Scalar inv = Scalar(1) / m(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0) continue;
            const Scalar f = m(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    auto pivots = echelon(aug);
    if (pivots.size() != rows_) throw std::invalid_argument("inverse: singular");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
    return r;
}

std::vector<std::vector<Scalar>> Mat::kernel_basis() const {
    Mat m = *this;
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(cols_);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat diag7(const std::array<int, 7>& d) {
    Mat m(7, 7);
    for (int i = 0; i < 7; ++i) m(i, i) = d[i];
    return m;
}

bool positive_definite(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Mat minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
        if (minor.det() <= 0) return false;
    }
    return true;
}

}  // namespace g2c
