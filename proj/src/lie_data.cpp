#include "gz/lie_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gz {

namespace {

FieldElement half() { return FieldElement(Rational(1, 2)); }
FieldElement sqrt3_over_2() { return FieldElement(0, Rational(1, 2)); }
FieldElement sqrt3_over_3() { return FieldElement(0, Rational(1, 3)); }

}  // namespace

bool RootSystem::contains(const FieldVector& v) const {
    return std::any_of(roots.begin(), roots.end(), [&](const FieldVector& r) { return r == v; });
}

std::array<FieldVector, 6> g2_positive_roots() {
    FieldElement h = half(), s = sqrt3_over_2();
    return {FieldVector{-3 * h, s},      // alpha1, long
            FieldVector{1, 0},           // alpha2, short
            FieldVector{3 * h, s},       // alpha3, long
            FieldVector{-h, s},          // alpha4, short
            FieldVector{-h, -s},         // alpha5, short
            FieldVector{0, -2 * s}};     // alpha6, long
}

RootSystem g2_root_system() {
    RootSystem rs;
    for (const auto& a : g2_positive_roots()) {
        rs.roots.push_back(a);
        rs.roots.push_back(FieldVector{-a[0], -a[1]});
    }
    auto alpha = g2_positive_roots();
    rs.simple_roots = {alpha[0], alpha[1]};
    return rs;
}

RootSystem su3_root_system() {
    RootSystem g2 = g2_root_system();
    RootSystem rs;
    for (const auto& r : g2.roots)
        if (dot(r, r) == FieldElement(3)) rs.roots.push_back(r);
    auto alpha = g2_positive_roots();
    rs.simple_roots = {alpha[0], alpha[2]};
    return rs;
}

Lattice::Lattice(std::vector<FieldVector> basis)
    : basis_(std::move(basis)),
      basis_matrix_(static_cast<int>(basis_.empty() ? 0 : basis_[0].size()),
                    static_cast<int>(basis_.size())),
      basis_inverse_(0, 0) {
    const int n = basis_matrix_.rows();
    if (static_cast<int>(basis_.size()) != n)
        throw std::invalid_argument("Lattice: basis must be square (full rank)");
    for (int j = 0; j < n; ++j) basis_matrix_.set_col(j, basis_[j]);
    auto inv = exact_inverse(basis_matrix_);
    if (!inv) throw std::invalid_argument("Lattice: basis is linearly dependent");
    basis_inverse_ = *inv;
}

FieldVector Lattice::coords(const FieldVector& v) const { return basis_inverse_.apply(v); }

FieldVector Lattice::from_coords(const FieldVector& c) const { return basis_matrix_.apply(c); }

bool Lattice::contains(const FieldVector& v) const {
    for (const auto& c : coords(v)) {
        if (!c.is_rational()) return false;
        if (denominator(c.rational_part()) != 1) return false;
    }
    return true;
}

Lattice Lattice::standard(int n) {
    std::vector<FieldVector> basis(n, FieldVector(n));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    return Lattice(std::move(basis));
}

Lattice weight_lattice() {
    FieldElement h = half(), s = sqrt3_over_2();
    return Lattice({FieldVector{1, 0, 0, 0, 0},
                    FieldVector{h, s, 0, 0, 0},
                    FieldVector{0, 0, 1, 0, 0},
                    FieldVector{0, 0, 0, 1, 0},
                    FieldVector{0, 0, 0, 0, 1}});
}

Lattice gz_torus_lattice() {
    FieldElement h = half(), s = sqrt3_over_2();
    FieldElement third(Rational(1, 3));
    return Lattice({FieldVector{1, 0, -third, -third, -third},
                    FieldVector{h, s, third, third, third},
                    FieldVector{0, 0, 1, 0, 0},
                    FieldVector{0, 0, 0, 1, 0},
                    FieldVector{0, 0, 0, 0, 1}});
}

std::pair<double, double> su3_coords_from_eigs(double mu1, double mu2, double mu3) {
    const double scale = std::max({1.0, std::abs(mu1), std::abs(mu2), std::abs(mu3)});
    if (mu1 > mu2 + 1e-12 * scale || mu2 > mu3 + 1e-12 * scale)
        throw std::domain_error("su3_coords_from_eigs: eigenvalues not sorted ascending");
    if (std::abs(mu1 + mu2 + mu3) > 1e-10 * scale)
        throw std::domain_error("su3_coords_from_eigs: eigenvalues not traceless");
    return {1.5 * mu2, 0.8660254037844386468 * (mu3 - mu1)};
}

std::pair<FieldElement, FieldElement> su3_coords_from_eigs(const FieldElement& mu1,
                                                           const FieldElement& mu2,
                                                           const FieldElement& mu3) {
    if (mu1 > mu2 || mu2 > mu3)
        throw std::domain_error("su3_coords_from_eigs: eigenvalues not sorted ascending");
    if (!(mu1 + mu2 + mu3).is_zero())
        throw std::domain_error("su3_coords_from_eigs: eigenvalues not traceless");
    FieldElement x1 = FieldElement(Rational(3, 2)) * mu2;
    FieldElement x2 = sqrt3_over_2() * (mu3 - mu1);
    return {x1, x2};
}

GZPoint thimm_gz(const HermitianMatrix& xi) {
    if (xi.size() != 3) throw std::invalid_argument("thimm_gz: expected a 3x3 matrix");
    const double scale = std::max(xi.matrix().norm(), 1e-30);
    if (std::abs(xi.matrix().trace().real()) > 1e-12 * scale)
        throw std::domain_error("thimm_gz: matrix is not traceless");

    auto mu = hermitian_eigenvalues(xi);
    auto [x1, x2] = su3_coords_from_eigs(mu[0], mu[1], mu[2]);
    auto nu = hermitian_eigenvalues(xi.block(2));

    GZPoint p;
    p.x = {x1, x2, nu[0], nu[1], xi.matrix()(0, 0).real()};
    return p;
}

std::optional<std::array<FieldElement, 5>> thimm_gz_exact(const FieldMatrix& xi) {
    if (xi.rows() != 3 || xi.cols() != 3)
        throw std::invalid_argument("thimm_gz_exact: expected a 3x3 matrix");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(xi.at(i, j) == xi.at(j, i)))
                throw std::domain_error("thimm_gz_exact: matrix is not symmetric");
    if (!(xi.at(0, 0) + xi.at(1, 1) + xi.at(2, 2)).is_zero())
        throw std::domain_error("thimm_gz_exact: matrix is not traceless");
    if (!xi.at(0, 2).is_zero() || !xi.at(1, 2).is_zero())
        return std::nullopt;  // spectrum leaves the field in general

    // Block eigenvalues by the quadratic formula, exact in Q(sqrt 3) when
    // the discriminant is a perfect square there.
    const FieldElement &p = xi.at(0, 0), &q = xi.at(0, 1), &r = xi.at(1, 1);
    FieldElement mean = half() * (p + r);
    auto disc = (half() * (p - r) * half() * (p - r) + q * q).sqrt();
    if (!disc) return std::nullopt;
    FieldElement nu1 = mean - *disc, nu2 = mean + *disc;

    std::array<FieldElement, 3> mu = {nu1, nu2, xi.at(2, 2)};
    std::sort(mu.begin(), mu.end());
    auto [x1, x2] = su3_coords_from_eigs(mu[0], mu[1], mu[2]);
    return std::array<FieldElement, 5>{x1, x2, nu1, nu2, p};
}

bool verify_interlacing(const GZPoint& p, double eps) {
    const double mu1 = -p.x[0] / 3 - p.x[1] / 1.7320508075688772935;
    const double mu2 = 2 * p.x[0] / 3;
    const double mu3 = -p.x[0] / 3 + p.x[1] / 1.7320508075688772935;
    return mu1 <= p.x[2] + eps && p.x[2] <= mu2 + eps && mu2 <= p.x[3] + eps &&
           p.x[3] <= mu3 + eps && p.x[2] <= p.x[4] + eps && p.x[4] <= p.x[3] + eps;
}

bool verify_interlacing(const std::array<FieldElement, 5>& p) {
    FieldElement third(Rational(1, 3));
    FieldElement mu1 = -third * p[0] - sqrt3_over_3() * p[1];
    FieldElement mu2 = 2 * third * p[0];
    FieldElement mu3 = -third * p[0] + sqrt3_over_3() * p[1];
    return mu1 <= p[2] && p[2] <= mu2 && mu2 <= p[3] && p[3] <= mu3 && p[2] <= p[4] &&
           p[4] <= p[3];
}

std::array<FieldVector, 3> kirwan_triangle(const FieldElement& lambda) {
    if (lambda.sign() <= 0) throw std::domain_error("kirwan_triangle: lambda must be positive");
    // lambda/(2 sqrt3) = lambda * sqrt3/6
    FieldElement c = lambda * FieldElement(0, Rational(1, 6));
    FieldElement h = lambda * half();
    return {FieldVector{0, lambda}, FieldVector{c, h}, FieldVector{-c, h}};
}

}  // namespace gz
