#include "gz/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace gz {

FieldElement dot(const FieldVector& x, const FieldVector& y) {
    assert(x.size() == y.size());
    FieldElement s;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

FieldVector operator+(const FieldVector& x, const FieldVector& y) {
    assert(x.size() == y.size());
    FieldVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

FieldVector operator-(const FieldVector& x, const FieldVector& y) {
    assert(x.size() == y.size());
    FieldVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

FieldVector operator*(const FieldElement& c, const FieldVector& x) {
    FieldVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

bool lex_less(const FieldVector& x, const FieldVector& y) {
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (y[i] < x[i]) return false;
    }
    return x.size() < y.size();
}

FieldMatrix::FieldMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("FieldMatrix: ragged initializer");
        for (const auto& x : r) data_.push_back(x);
    }
}

FieldMatrix FieldMatrix::identity(int n) {
    FieldMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldVector FieldMatrix::row(int i) const {
    FieldVector r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

FieldVector FieldMatrix::col(int j) const {
    FieldVector c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void FieldMatrix::set_col(int j, const FieldVector& v) {
    assert(static_cast<int>(v.size()) == rows_);
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FieldVector FieldMatrix::apply(const FieldVector& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    FieldVector r(rows_);
    for (int i = 0; i < rows_; ++i) {
        FieldElement s;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * x[j];
        r[i] = std::move(s);
    }
    return r;
}

namespace {

// Bareiss fraction-free elimination.  Returns the rank; if det is non-null
// and the matrix is square, stores the determinant.  Pivots are chosen by
// exact non-zero tests.
int bareiss(FieldMatrix& a, FieldElement* det) {
    const int m = a.rows(), n = a.cols();
    FieldElement prev(1);
    int sign_flips = 0;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(rank, j));
            ++sign_flips;
        }
        for (int i = rank + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j)
                a.at(i, j) = (a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j)) / prev;
            a.at(i, col) = FieldElement();
        }
        prev = a.at(rank, col);
        ++rank;
    }
    if (det) {
        if (m != n) throw std::invalid_argument("determinant of non-square matrix");
        if (rank < n)
            *det = FieldElement();
        else
            *det = (sign_flips % 2) ? -prev : prev;
    }
    return rank;
}

// Gauss-Jordan reduction to RREF; returns pivot columns.
std::vector<int> rref(FieldMatrix& a) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
        FieldElement inv = a.at(r, col).inverse();
        for (int j = col; j < n; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            FieldElement f = a.at(i, col);
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int exact_rank(FieldMatrix a) { return bareiss(a, nullptr); }

FieldElement exact_det(FieldMatrix a) {
    FieldElement d;
    bareiss(a, &d);
    return d;
}

std::optional<FieldVector> exact_solve(const FieldMatrix& a, const FieldVector& rhs) {
    if (a.rows() != a.cols() || static_cast<int>(rhs.size()) != a.rows())
        throw std::invalid_argument("exact_solve: dimension mismatch");
    const int n = a.rows();
    FieldMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    FieldVector x(n);
    for (int i = 0; i < n; ++i) x[i] = aug.at(i, n);
    // Contract: the solution is verified by exact substitution.
    FieldVector back = a.apply(x);
    for (int i = 0; i < n; ++i)
        if (!(back[i] == rhs[i])) throw std::logic_error("exact_solve: verification failed");
    return x;
}

std::vector<FieldVector> exact_nullspace(const FieldMatrix& a) {
    FieldMatrix r = a;
    auto pivots = rref(r);
    const int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<FieldVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FieldVector v(n);
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FieldMatrix> exact_inverse(const FieldMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("exact_inverse: non-square");
    const int n = a.rows();
    FieldMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    FieldMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace gz
