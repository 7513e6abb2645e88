// linalg.hpp — dense exact linear algebra over a field (Gaussian
// elimination, rank, kernel, solve, inverse). Instantiated with Cyc; row
// operations skip zero entries so sparse inputs stay cheap.
#pragma once

#include "liegrade/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace liegrade {

template <class K>
bool kzero(const K& x)
{
    if constexpr (requires { x.is_zero(); })
        return x.is_zero();
    else
        return x == 0;
}

template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return d_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const K& at(int i, int j) const { return d_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_)
            throw Error("matrix product: dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (kzero(a))
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const K& b = o.at(k, j);
                    if (!kzero(b))
                        r.at(i, j) += a * b;
                }
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const
    {
        if (static_cast<int>(v.size()) != cols_)
            throw Error("matrix apply: dimension mismatch");
        std::vector<K> r(static_cast<size_t>(rows_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!kzero(at(i, j)) && !kzero(v[static_cast<size_t>(j)]))
                    r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return r;
    }

    Mat transposed() const
    {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<K> d_;
};

// In-place reduced row echelon form. Returns the pivot columns.
template <class K>
std::vector<int> echelonize(Mat<K>& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!kzero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j)
            if (!kzero(m.at(r, j)))
                m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || kzero(m.at(i, c)))
                continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!kzero(m.at(r, j)))
                    m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m)
{
    return static_cast<int>(echelonize(m).size());
}

// Basis of the right kernel { x : M x = 0 }.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m)
{
    std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots)
        is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)])
            continue;
        std::vector<K> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(c)] = K(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Unique solution count not required: returns one solution of M x = b if any.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& m, const std::vector<K>& b)
{
    Mat<K> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;  // inconsistent
    std::vector<K> x(static_cast<size_t>(m.cols()));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

template <class K>
Mat<K> inverse(const Mat<K>& m)
{
    if (m.rows() != m.cols())
        throw Error("inverse of non-square matrix");
    int n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error("matrix is singular");
    Mat<K> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

template <class K>
K determinant(Mat<K> m)
{
    if (m.rows() != m.cols())
        throw Error("determinant of non-square matrix");
    K det(1);
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!kzero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0)
            return K(0);
        if (p != c) {
            for (int j = c; j < n; ++j)
                std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det = det * m.at(c, c);
        K inv = K(1) / m.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (kzero(m.at(i, c)))
                continue;
            K f = m.at(i, c) * inv;
            for (int j = c; j < n; ++j)
                if (!kzero(m.at(c, j)))
                    m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

}  // namespace liegrade
