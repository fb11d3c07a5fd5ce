#include "gz/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gz {

SymmetricEigenSystem jacobi_symmetric(Eigen::MatrixXd a, int max_sweeps) {
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double scale = std::max(a.norm(), 1e-300);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2 * off) <= 1e-15 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const double tau = s / (1 + c);
                const double apq = a(p, q);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymmetricEigenSystem out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]);
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("HermitianMatrix: non-square");
    if (m.rows() > 7) throw std::invalid_argument("HermitianMatrix: size > 7 unsupported");
    const double scale = m.cwiseAbs().maxCoeff();
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (scale > 0 && dev > 1e-14 * scale)
        throw std::invalid_argument("HermitianMatrix: input is not Hermitian within tolerance");
    m_ = (m + m.adjoint()) / 2.0;
}

Eigen::MatrixXd real_embedding(const HermitianMatrix& m) {
    const int n = m.size();
    Eigen::MatrixXd a = m.matrix().real();
    Eigen::MatrixXd b = m.matrix().imag();
    Eigen::MatrixXd e(2 * n, 2 * n);
    e << a, -b, b, a;
    return e;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
    const int n = m.size();
    auto sys = jacobi_symmetric(real_embedding(m));
    std::vector<double> vals(n);
    // Embedded pairs are adjacent after sorting; average each pair.
    for (int k = 0; k < n; ++k) vals[k] = (sys.values(2 * k) + sys.values(2 * k + 1)) / 2;
    return vals;
}

}  // namespace gz
