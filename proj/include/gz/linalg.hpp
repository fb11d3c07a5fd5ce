#ifndef GZ_LINALG_HPP
#define GZ_LINALG_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "gz/field.hpp"

namespace gz {

using FieldVector = std::vector<FieldElement>;

FieldElement dot(const FieldVector& x, const FieldVector& y);
FieldVector operator+(const FieldVector& x, const FieldVector& y);
FieldVector operator-(const FieldVector& x, const FieldVector& y);
FieldVector operator*(const FieldElement& c, const FieldVector& x);
bool lex_less(const FieldVector& x, const FieldVector& y);

/// Dense matrix over Q(sqrt 3).  Dimensions are fixed at construction.
class FieldMatrix {
public:
    FieldMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    FieldMatrix(std::initializer_list<std::initializer_list<FieldElement>> rows);

    static FieldMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement& at(int i, int j) { return data_[i * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return data_[i * cols_ + j]; }

    FieldVector row(int i) const;
    FieldVector col(int j) const;
    void set_col(int j, const FieldVector& v);

    FieldMatrix transposed() const;
    FieldVector apply(const FieldVector& x) const;  // A * x

private:
    int rows_, cols_;
    std::vector<FieldElement> data_;
};

/// Rank over the field, by fraction-free (Bareiss) elimination with exact
/// sign pivoting.
int exact_rank(FieldMatrix a);

/// Determinant of a square matrix, fraction-free elimination.
FieldElement exact_det(FieldMatrix a);

/// Exact solution of A x = rhs for square A.  Returns nullopt when A is
/// singular ("singular" is a value, not a failure).  The result is checked
/// by exact back-substitution before it is returned.
std::optional<FieldVector> exact_solve(const FieldMatrix& a, const FieldVector& rhs);

/// Columns spanning the kernel of A, via reduced row echelon form.
std::vector<FieldVector> exact_nullspace(const FieldMatrix& a);

/// Exact inverse of a square matrix, or nullopt when singular.
std::optional<FieldMatrix> exact_inverse(const FieldMatrix& a);

}  // namespace gz

#endif
