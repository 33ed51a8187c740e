#pragma once

#include "htower/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace htower {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x) {
        Matrix z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = -x.a_[i];
        return z;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const T& v = x(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.c_; ++j)
                    if (!is_zero(y(k, j))) z(i, j) += v * y(k, j);
            }
        return z;
    }
    // Left scalar multiple.
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix z(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = s * x.a_[i];
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero_matrix() const {
        return std::all_of(a_.begin(), a_.end(), [](const T& v) { return is_zero(v); });
    }

    Matrix conj_transpose() const {
        Matrix z(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) z(j, i) = conj((*this)(i, j));
        return z;
    }

    Matrix transpose() const {
        Matrix z(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) z(j, i) = (*this)(i, j);
        return z;
    }

    Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Matrix z(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) z(i, j) = (*this)(rs[i], cs[j]);
        return z;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.r_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < m.c_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix: shape mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

// Row reduction with left multipliers; valid over any division ring.
template <class T>
std::size_t row_rank(Matrix<T> m) {
    std::size_t rank = 0;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && is_zero(m(piv, col))) ++piv;
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(rank, j));
        T pinv = inverse(m(rank, col));
        for (std::size_t i = rank + 1; i < R; ++i) {
            if (is_zero(m(i, col))) continue;
            T f = m(i, col) * pinv;
            for (std::size_t j = col; j < C; ++j)
                if (!is_zero(m(rank, j))) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Solve G X = B for square invertible G.
template <class T>
Matrix<T> left_solve(Matrix<T> g, Matrix<T> b) {
    const std::size_t n = g.rows();
    if (g.cols() != n || b.rows() != n) throw std::invalid_argument("left_solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(g(piv, col))) ++piv;
        if (piv == n) throw std::domain_error("left_solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(g(piv, j), g(col, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(piv, j), b(col, j));
        }
        T pinv = inverse(g(col, col));
        for (std::size_t j = 0; j < n; ++j) g(col, j) = pinv * g(col, j);
        for (std::size_t j = 0; j < b.cols(); ++j) b(col, j) = pinv * b(col, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(g(i, col))) continue;
            T f = g(i, col);
            for (std::size_t j = 0; j < n; ++j) g(i, j) -= f * g(col, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
        }
    }
    return b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& g) {
    return left_solve(g, Matrix<T>::identity(g.rows()));
}

// q = z + w j  ->  [[z, w], [-conj(w), conj(z)]]
inline Matrix<CQ> complex_embedding(const Matrix<HQ>& m) {
    Matrix<CQ> z(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const HQ& q = m(i, j);
            CQ a{q.a, q.b}, b{q.c, q.d};
            z(2 * i, 2 * j) = a;
            z(2 * i, 2 * j + 1) = b;
            z(2 * i + 1, 2 * j) = -conj(b);
            z(2 * i + 1, 2 * j + 1) = conj(a);
        }
    return z;
}

template <class T>
std::size_t rank(const Matrix<T>& m) { return row_rank(m); }

inline std::size_t rank(const Matrix<HQ>& m) {
    std::size_t c = row_rank(complex_embedding(m));
    if (c % 2) throw std::logic_error("complex embedding of quaternionic matrix has odd rank");
    return c / 2;
}

// Sparse rational rows: (column, value) sorted by column.
using SparseRow = std::vector<std::pair<int, Q>>;

inline std::size_t sparse_rank(std::vector<SparseRow> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
               rows.end());
    std::size_t rank = 0;
    std::map<int, SparseRow> pivots;  // leading column -> reduced row with leading coefficient 1
    for (auto& row : rows) {
        SparseRow cur = std::move(row);
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            Q f = cur.front().second;
            const SparseRow& p = it->second;
            SparseRow out;
            out.reserve(cur.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < p.size()) {
                if (j == p.size() || (i < cur.size() && cur[i].first < p[j].first)) {
                    out.push_back(std::move(cur[i++]));
                } else if (i == cur.size() || p[j].first < cur[i].first) {
                    out.emplace_back(p[j].first, -f * p[j].second);
                    ++j;
                } else {
                    Q v = cur[i].second - f * p[j].second;
                    if (sgn(v) != 0) out.emplace_back(cur[i].first, std::move(v));
                    ++i, ++j;
                }
            }
            cur = std::move(out);
        }
        if (cur.empty()) continue;
        Q lead = cur.front().second;
        for (auto& e : cur) e.second /= lead;
        pivots.emplace(cur.front().first, std::move(cur));
        ++rank;
    }
    return rank;
}

inline std::size_t sparse_rank(const Matrix<Q>& m) {
    std::vector<SparseRow> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) rows[i].emplace_back(static_cast<int>(j), m(i, j));
    return sparse_rank(std::move(rows));
}

} // namespace htower
