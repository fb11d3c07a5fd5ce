#ifndef GZ_HERMITIAN_HPP
#define GZ_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace gz {

struct SymmetricEigenSystem {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns, same order
};

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.
/// Rotations are applied until the off-diagonal Frobenius norm falls below
/// ~1e-15 of the matrix norm.
SymmetricEigenSystem jacobi_symmetric(Eigen::MatrixXd a, int max_sweeps = 64);

/// Complex Hermitian matrix, n <= 7.  Symmetrized on construction; input
/// further than 1e-14 * max|entry| from its conjugate transpose is rejected.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const Eigen::MatrixXcd& m);

    int size() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return m_; }

    /// Top-left k x k principal block, itself Hermitian.
    HermitianMatrix block(int k) const { return HermitianMatrix(m_.topLeftCorner(k, k)); }

private:
    Eigen::MatrixXcd m_;
};

/// Eigenvalues sorted ascending.  Computed by cyclic Jacobi on the 2n x 2n
/// real symmetric embedding [[A, -B], [B, A]] of M = A + iB; the embedded
/// spectrum doubles each eigenvalue, so every other sorted value is taken.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// The real symmetric embedding used by the eigensolver (exposed for the
/// residual checks in the test suite).
Eigen::MatrixXd real_embedding(const HermitianMatrix& m);

}  // namespace gz

#endif
